#pragma once

// Round-based simulation of a decision tree's work on one tuple of attribute
// values, without materializing the tree. Each round covers the current
// system's max reduct, queries the cover's attributes, folds the answers into
// the accumulated knowledge and restricts the original system by it. The run
// stops when the restriction is empty or every surviving rule has an empty
// left-hand side; the answer is every rule consistent with the knowledge.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rulesim/core.hpp"
#include "rulesim/covers.hpp"
#include "rulesim/transform.hpp"

namespace rulesim {

// Source of attribute values. Answers must be stable: querying the same
// attribute twice yields the same value. Raw answers may lie outside the
// system's value sets; the simulator folds those to star before use.
using ValueProvider = std::function<ExtendedValue(AttributeId)>;

inline ValueProvider tuple_provider(ExtendedTuple t) {
    return [t = std::move(t)](AttributeId a) { return t.value_of(a); };
}

// Folds a raw value into the attribute's extended domain: values occurring in
// the system stay concrete, anything else becomes star.
inline ExtendedValue normalize_value(const Measures& m, AttributeId a, ExtendedValue raw) {
    auto it = m.values.find(a);
    if (it == m.values.end())
        throw DomainError("normalize_value: " + to_string(a) + " is not a system attribute");
    if (raw.is_star()) return raw;
    if (std::binary_search(it->second.begin(), it->second.end(), raw.value())) return raw;
    return ExtendedValue::star();
}

inline ExtendedValue normalize_value(const RuleSystem& s, AttributeId a, ExtendedValue raw) {
    return normalize_value(measures(s), a, raw);
}

enum class CoverStrategy { greedy, rule };

inline std::string to_string(CoverStrategy st) {
    return st == CoverStrategy::greedy ? "greedy" : "rule";
}

struct SimulationResult {
    std::vector<RuleId> answer;        // realizable rule ids, sorted
    std::vector<Assignment> trace;     // queries in order, normalized values
    std::vector<std::size_t> rounds;   // queries per round; sum == depth
    std::size_t depth = 0;             // == trace.size()
};

// Simulates one complete path of the decision tree induced by the provider's
// answers. Requires n(S) > 0; the degenerate case is degenerate_answer's job.
inline SimulationResult simulate(const RuleSystem& s, const ValueProvider& provider,
                                 CoverStrategy strategy) {
    const Measures m = measures(s);
    if (m.n == 0) throw DomainError("simulate: system has no attributes");

    SimulationResult res;
    EquationSystem alpha;
    std::optional<RuleSystem> current = s;
    while (true) {
        const RuleSystem reduct = max_reduct(*current);
        const NodeCover cover =
            strategy == CoverStrategy::greedy ? greedy_cover(reduct) : rule_cover(reduct);
        for (auto a : cover.attributes()) {
            const ExtendedValue v = normalize_value(m, a, provider(a));
            alpha.insert(a, v);
            res.trace.push_back({a, v});
        }
        res.rounds.push_back(cover.size());
        current = restricted(s, alpha);
        if (!current || all_lhs_empty(*current)) break;
    }

    for (const auto& r : s.rules())
        if (consistent_union(r, alpha)) res.answer.push_back(r.id());
    std::sort(res.answer.begin(), res.answer.end());
    res.depth = res.trace.size();
    return res;
}

}  // namespace rulesim
