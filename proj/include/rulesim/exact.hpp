#pragma once

// Ground-truth oracles: exact minimum decision-tree depth by memoized minimax
// search over restrictions, the derived lower/upper bound report, and the
// witness-tuple construction behind the counting bound.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rulesim/core.hpp"
#include "rulesim/covers.hpp"
#include "rulesim/simulate.hpp"
#include "rulesim/transform.hpp"

namespace rulesim {

struct SearchBudget {
    std::size_t max_attrs = 8;
    std::size_t max_rules = 10;
    std::size_t max_values = 3;  // cap on k
};

// Value domain branched over at each search node: the values occurring in the
// current (restricted) system, or those of the system the search started
// from. Both yield the same depth; `current` merges branches that induce the
// same restriction and is the default.
enum class BranchDomain { current, original };

namespace detail {

class DepthSearch {
public:
    DepthSearch(const RuleSystem& s, bool memoize, BranchDomain domain)
        : memoize_(memoize), domain_(domain) {
        for (const auto& r : s.rules()) state_.push_back({r.lhs(), r.decision()});
        if (domain_ == BranchDomain::original) original_values_ = measures(s).values;
    }

    std::size_t run() { return depth_of(state_); }

private:
    struct Row {
        std::vector<Equation> lhs;  // sorted by attribute
        Nat decision;
        auto operator<=>(const Row&) const = default;
    };
    using State = std::vector<Row>;

    static State restrict_by(const State& state, AttributeId a, ExtendedValue v) {
        State out;
        out.reserve(state.size());
        for (const auto& row : state) {
            auto it = std::lower_bound(
                row.lhs.begin(), row.lhs.end(), a,
                [](const Equation& e, AttributeId x) { return e.attr < x; });
            if (it == row.lhs.end() || it->attr != a) {
                out.push_back(row);
            } else if (!v.is_star() && it->value == v.value()) {
                Row shorter{row.lhs, row.decision};
                shorter.lhs.erase(shorter.lhs.begin() + (it - row.lhs.begin()));
                out.push_back(std::move(shorter));
            }  // conflicting value: rule dropped
        }
        return out;
    }

    static std::string encode(const State& state) {
        std::string key;
        auto put = [&key](Nat x) {
            for (int i = 0; i < 4; ++i) key.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
        };
        for (const auto& row : state) {
            put(static_cast<Nat>(row.lhs.size()));
            for (const auto& eq : row.lhs) {
                put(eq.attr.index);
                put(eq.value);
            }
            put(row.decision);
        }
        return key;
    }

    std::size_t depth_of(State state) {
        bool trivial = true;
        for (const auto& row : state)
            if (!row.lhs.empty()) trivial = false;
        if (trivial) return 0;  // empty system or all left-hand sides empty

        std::sort(state.begin(), state.end());  // canonical form, ids dropped
        std::string key;
        if (memoize_) {
            key = encode(state);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }

        std::map<AttributeId, std::vector<Nat>> values;  // V of the current state
        for (const auto& row : state)
            for (const auto& eq : row.lhs) values[eq.attr].push_back(eq.value);
        for (auto& [a, vs] : values) {
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        }

        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const auto& [a, current_vs] : values) {
            const std::vector<Nat>& branch_vs =
                domain_ == BranchDomain::current ? current_vs : original_values_.at(a);
            std::size_t worst = depth_of(restrict_by(state, a, ExtendedValue::star()));
            for (Nat v : branch_vs) {
                if (1 + worst >= best) break;  // cannot beat the best attribute
                worst = std::max(worst, depth_of(restrict_by(state, a, ExtendedValue::of(v))));
            }
            best = std::min(best, 1 + worst);
        }
        if (memoize_) memo_[key] = best;
        return best;
    }

    State state_;
    bool memoize_;
    BranchDomain domain_;
    std::map<AttributeId, std::vector<Nat>> original_values_;
    std::unordered_map<std::string, std::size_t> memo_;
};

}  // namespace detail

// Minimum depth of a decision tree solving the all-realizable-rules problem,
// by minimax over query choices: zero for a system that is empty or carries
// only empty left-hand sides, otherwise the best attribute's worst branch.
inline std::size_t exact_min_depth(const RuleSystem& s, const SearchBudget& budget = {},
                                   bool memoize = true,
                                   BranchDomain domain = BranchDomain::current) {
    const Measures m = measures(s);
    if (m.n > budget.max_attrs)
        throw BudgetError("exact_min_depth: attribute count " + std::to_string(m.n) +
                          " exceeds the budget of " + std::to_string(budget.max_attrs));
    if (s.size() > budget.max_rules)
        throw BudgetError("exact_min_depth: rule count " + std::to_string(s.size()) +
                          " exceeds the budget of " + std::to_string(budget.max_rules));
    if (m.k > budget.max_values)
        throw BudgetError("exact_min_depth: value-set size " + std::to_string(m.k) +
                          " exceeds the budget of " + std::to_string(budget.max_values));
    return detail::DepthSearch(s, memoize, domain).run();
}

inline std::size_t exact_min_depth(const std::optional<RuleSystem>& s,
                                   const SearchBudget& budget = {}, bool memoize = true,
                                   BranchDomain domain = BranchDomain::current) {
    if (!s) return 0;
    return exact_min_depth(*s, budget, memoize, domain);
}

// Pruning a system by consistent knowledge never increases the minimum depth.
// The knowledge must speak about system attributes with values from their
// extended domains.
inline bool depth_monotone_under_restriction(const RuleSystem& s, const EquationSystem& alpha,
                                             const SearchBudget& budget = {}) {
    if (!alpha.consistent())
        throw DomainError("depth_monotone_under_restriction: inconsistent equation system");
    const Measures m = measures(s);
    for (const auto& e : alpha.assignments()) {
        auto it = m.values.find(e.attr);
        if (it == m.values.end())
            throw DomainError("depth_monotone_under_restriction: " + to_string(e.attr) +
                              " is not a system attribute");
        if (!e.value.is_star() &&
            !std::binary_search(it->second.begin(), it->second.end(), e.value.value()))
            throw DomainError("depth_monotone_under_restriction: value outside the extended "
                              "domain of " + to_string(e.attr));
    }
    return exact_min_depth(s, budget) >= exact_min_depth(restricted(s, alpha), budget);
}

// The tuple that pins a rule's own values and stars every other attribute.
inline ExtendedTuple witness_tuple(const RuleSystem& s, const DecisionRule& r) {
    std::vector<Assignment> entries;
    for (auto a : measures(s).attrs) {
        auto v = r.value_of(a);
        entries.push_back({a, v ? ExtendedValue::of(*v) : ExtendedValue::star()});
    }
    return ExtendedTuple(std::move(entries));
}

// Within the max reduct, a rule's witness tuple realizes that rule and no
// other: the construction behind the counting lower bound.
inline bool witness_isolates(const RuleSystem& s, RuleId reduct_rule_id) {
    const RuleSystem reduct = max_reduct(s);
    const DecisionRule* r = reduct.find(reduct_rule_id);
    if (!r) throw DomainError("witness_isolates: rule " + std::to_string(reduct_rule_id) +
                              " is not in the max reduct");
    const auto realizable = realizable_rules(reduct, witness_tuple(s, *r));
    return realizable.size() == 1 && realizable.front() == reduct_rule_id;
}

// Every tuple over the system's extended value domains, attribute-major with
// concrete values ascending and star last.
inline std::vector<ExtendedTuple> all_tuples(const RuleSystem& s,
                                             std::size_t cap = std::size_t{1} << 20) {
    const Measures m = measures(s);
    std::size_t total = 1;
    for (auto a : m.attrs) {
        total *= m.values.at(a).size() + 1;
        if (total > cap)
            throw BudgetError("all_tuples: tuple count exceeds the cap of " +
                              std::to_string(cap));
    }
    std::vector<std::vector<ExtendedValue>> domains;
    for (auto a : m.attrs) {
        std::vector<ExtendedValue> dom;
        for (Nat v : m.values.at(a)) dom.push_back(ExtendedValue::of(v));
        dom.push_back(ExtendedValue::star());
        domains.push_back(std::move(dom));
    }
    std::vector<ExtendedTuple> out;
    out.reserve(total);
    std::vector<std::size_t> odo(m.n, 0);
    for (std::size_t count = 0; count < total; ++count) {
        std::vector<Assignment> entries;
        entries.reserve(m.n);
        for (std::size_t i = 0; i < m.n; ++i) entries.push_back({m.attrs[i], domains[i][odo[i]]});
        out.emplace_back(std::move(entries));
        for (std::size_t i = m.n; i-- > 0;) {
            if (++odo[i] < domains[i].size()) break;
            odo[i] = 0;
        }
    }
    return out;
}

struct BoundReport {
    std::size_t h_exact = 0;       // exact minimum depth
    std::size_t beta = 0;          // minimum node cover size: lower bound
    std::size_t d = 0;             // max rule length: lower bound
    std::size_t k = 0;
    std::size_t reduct_size = 0;   // |max reduct|
    double lb_count = 0.0;         // ln(reduct_size) / ln(k + 1): lower bound
    double depth_ub = 0.0;         // h^3 ln(k + 1) + h: simulated-depth upper bound
    std::size_t max_sim_depth = 0; // worst greedy simulation over every tuple

    bool cover_bound_ok = false;   // h_exact >= beta
    bool length_bound_ok = false;  // h_exact >= d
    bool count_bound_ok = false;   // h_exact >= lb_count
    bool sim_depth_ok = false;     // max_sim_depth <= depth_ub

    bool all_ok() const {
        return cover_bound_ok && length_bound_ok && count_bound_ok && sim_depth_ok;
    }
};

// Computes the exact depth, all three lower bounds and the simulated-depth
// upper bound, and checks each of them.
inline BoundReport verify_bounds(const RuleSystem& s, const SearchBudget& budget = {}) {
    BoundReport rep;
    const Measures m = measures(s);
    rep.h_exact = exact_min_depth(s, budget);
    rep.beta = exact_min_cover(s).beta;
    rep.d = m.d;
    rep.k = m.k;
    rep.reduct_size = max_reduct(s).size();
    rep.lb_count = rep.reduct_size == 1
                       ? 0.0
                       : std::log(static_cast<double>(rep.reduct_size)) /
                             std::log(static_cast<double>(m.k) + 1.0);
    const double h = static_cast<double>(rep.h_exact);
    rep.depth_ub = h * h * h * std::log(static_cast<double>(m.k) + 1.0) + h;

    if (m.n > 0) {
        for (const auto& t : all_tuples(s)) {
            const auto sim = simulate(s, tuple_provider(t), CoverStrategy::greedy);
            rep.max_sim_depth = std::max(rep.max_sim_depth, sim.depth);
        }
    }

    rep.cover_bound_ok = rep.h_exact >= rep.beta;
    rep.length_bound_ok = rep.h_exact >= rep.d;
    rep.count_bound_ok = static_cast<double>(rep.h_exact) >= rep.lb_count;
    rep.sim_depth_ok = static_cast<double>(rep.max_sim_depth) <= rep.depth_ub;
    return rep;
}

}  // namespace rulesim
