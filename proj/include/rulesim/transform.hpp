#pragma once

// System transformations: restriction by accumulated knowledge, the
// maximal-rule reduct, and the hypergraph view used by the cover algorithms.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rulesim/core.hpp"

namespace rulesim {

// Restriction of S by a consistent equation system: rules whose left-hand
// side conflicts with the knowledge are dropped, and the surviving rules lose
// every equation already present in it. The result can be empty; rule ids are
// inherited from S. Attributes outside A(S) affect nothing.
inline std::optional<RuleSystem> restricted(const RuleSystem& s, const EquationSystem& alpha) {
    if (!alpha.consistent()) throw DomainError("restricted: inconsistent equation system");
    std::vector<DecisionRule> out;
    for (const auto& r : s.rules()) {
        if (!consistent_union(r, alpha)) continue;
        std::vector<Equation> lhs;
        lhs.reserve(r.lhs().size());
        for (const auto& eq : r.lhs())
            if (!alpha.contains(eq.attr, ExtendedValue::of(eq.value))) lhs.push_back(eq);
        out.emplace_back(r.id(), std::move(lhs), r.decision());
    }
    if (out.empty()) return std::nullopt;
    return RuleSystem(std::move(out));
}

inline std::optional<RuleSystem> restricted(const std::optional<RuleSystem>& s,
                                            const EquationSystem& alpha) {
    if (!s) return std::nullopt;
    return restricted(*s, alpha);
}

inline bool all_lhs_empty(const RuleSystem& s) {
    for (const auto& r : s.rules())
        if (!r.lhs_empty()) return false;
    return true;
}

// One representative per left-hand-side equivalence class among the rules of
// maximal length. The representative is the class member with the smallest id.
inline RuleSystem max_reduct(const RuleSystem& s) {
    std::size_t d = 0;
    for (const auto& r : s.rules()) d = std::max(d, r.length());

    std::vector<DecisionRule> reps;
    for (const auto& r : s.rules()) {
        if (r.length() != d) continue;
        bool seen = false;
        for (auto& kept : reps) {
            if (kept.lhs() == r.lhs()) {  // lhs is sorted, equality = same K(r)
                if (r.id() < kept.id()) kept = r;
                seen = true;
                break;
            }
        }
        if (!seen) reps.push_back(r);
    }
    std::sort(reps.begin(), reps.end(),
              [](const DecisionRule& a, const DecisionRule& b) { return a.id() < b.id(); });
    return RuleSystem(std::move(reps));
}

// Hypergraph view: nodes are the system's attributes, one edge per rule
// carrying that rule's attribute set. Empty edges (empty left-hand sides)
// are kept but no cover is required to hit them.
struct Hypergraph {
    std::vector<AttributeId> nodes;
    std::vector<std::pair<RuleId, std::vector<AttributeId>>> edges;
};

inline Hypergraph build_hypergraph(const RuleSystem& s) {
    Hypergraph g;
    g.nodes = measures(s).attrs;
    for (const auto& r : s.rules()) {
        std::vector<AttributeId> edge;
        edge.reserve(r.length());
        for (const auto& eq : r.lhs()) edge.push_back(eq.attr);
        g.edges.emplace_back(r.id(), std::move(edge));
    }
    return g;
}

inline std::string to_adjacency_text(const Hypergraph& g) {
    std::string out = "nodes:";
    for (auto a : g.nodes) out += " " + to_string(a);
    out += "\n";
    for (const auto& [id, edge] : g.edges) {
        out += "rule " + std::to_string(id) + ":";
        for (auto a : edge) out += " " + to_string(a);
        out += "\n";
    }
    return out;
}

}  // namespace rulesim
