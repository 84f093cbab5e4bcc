#pragma once

// Node covers of the rule-system hypergraph: the greedy construction, the
// older whole-rule construction, and an exact minimum-cover search used as
// the ground truth for the cover lower bound.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rulesim/core.hpp"
#include "rulesim/transform.hpp"

namespace rulesim {

// Ordered attribute list hitting the attribute set of every rule that has
// one. Order is the selection order of the constructing algorithm.
class NodeCover {
public:
    NodeCover(std::vector<AttributeId> attrs, const RuleSystem& system)
        : attrs_(std::move(attrs)) {
        for (const auto& r : system.rules()) {
            if (r.lhs_empty()) continue;
            bool hit = false;
            for (auto a : attrs_) {
                if (r.mentions(a)) {
                    hit = true;
                    break;
                }
            }
            if (!hit)
                throw DomainError("NodeCover: rule " + std::to_string(r.id()) +
                                  " is not covered");
        }
    }

    const std::vector<AttributeId>& attributes() const { return attrs_; }
    std::size_t size() const { return attrs_.size(); }

private:
    std::vector<AttributeId> attrs_;
};

namespace detail {

inline void require_attributes(const Measures& m, const char* who) {
    if (m.n == 0) throw DomainError(std::string(who) + ": system has no attributes");
}

}  // namespace detail

// Greedy cover: per step, take the attribute covering the most rules still
// uncovered, ties broken by minimum attribute index. Rules with empty
// left-hand sides are ignored.
inline NodeCover greedy_cover(const RuleSystem& s) {
    const Measures m = measures(s);
    detail::require_attributes(m, "greedy_cover");

    std::vector<const DecisionRule*> uncovered;
    for (const auto& r : s.rules())
        if (!r.lhs_empty()) uncovered.push_back(&r);

    std::vector<AttributeId> picked;
    while (!uncovered.empty()) {
        AttributeId best{};
        std::size_t best_count = 0;
        for (auto a : m.attrs) {  // increasing index: first maximum wins
            std::size_t count = 0;
            for (const auto* r : uncovered)
                if (r->mentions(a)) ++count;
            if (count > best_count) {
                best_count = count;
                best = a;
            }
        }
        picked.push_back(best);
        std::erase_if(uncovered, [&](const DecisionRule* r) { return r->mentions(best); });
    }
    return NodeCover(std::move(picked), s);
}

// The older construction: take the lowest-id rule not yet covered and add
// all of its attributes, until every rule is covered. The result is the
// attribute list in insertion order, deduplicated.
inline NodeCover rule_cover(const RuleSystem& s) {
    const Measures m = measures(s);
    detail::require_attributes(m, "rule_cover");

    std::vector<const DecisionRule*> by_id;
    for (const auto& r : s.rules()) by_id.push_back(&r);
    std::sort(by_id.begin(), by_id.end(),
              [](const DecisionRule* a, const DecisionRule* b) { return a->id() < b->id(); });

    std::vector<AttributeId> picked;
    auto in_cover = [&](AttributeId a) {
        return std::find(picked.begin(), picked.end(), a) != picked.end();
    };
    auto covered = [&](const DecisionRule& r) {
        for (const auto& eq : r.lhs())
            if (in_cover(eq.attr)) return true;
        return false;
    };
    for (const auto* r : by_id) {
        if (r->lhs_empty() || covered(*r)) continue;
        for (const auto& eq : r->lhs())
            if (!in_cover(eq.attr)) picked.push_back(eq.attr);
    }
    return NodeCover(std::move(picked), s);
}

struct MinCoverResult {
    NodeCover cover;
    std::size_t beta;  // == cover.size()
};

// Exact minimum node cover by exhaustive subset search in increasing size
// order; within one size, subsets are tried in lexicographic attribute
// order, so the first hit is the lexicographically smallest minimum cover.
// Edges that contain another edge are dropped up front.
inline MinCoverResult exact_min_cover(const RuleSystem& s, std::size_t max_attrs = 20) {
    const Measures m = measures(s);
    if (m.n > max_attrs)
        throw BudgetError("exact_min_cover: " + std::to_string(m.n) +
                          " attributes exceed the budget of " + std::to_string(max_attrs));
    if (m.n > 63) throw BudgetError("exact_min_cover: attribute count exceeds mask width");

    // Attribute -> bit position, edges as bitmasks.
    std::vector<std::uint64_t> edges;
    for (const auto& r : s.rules()) {
        if (r.lhs_empty()) continue;
        std::uint64_t mask = 0;
        for (const auto& eq : r.lhs()) {
            auto it = std::lower_bound(m.attrs.begin(), m.attrs.end(), eq.attr);
            mask |= std::uint64_t{1} << (it - m.attrs.begin());
        }
        edges.push_back(mask);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::uint64_t> minimal;
    for (auto e : edges) {
        bool has_proper_subset = std::any_of(
            edges.begin(), edges.end(),
            [&](std::uint64_t f) { return f != e && (f & e) == f; });
        if (!has_proper_subset) minimal.push_back(e);
    }
    edges = std::move(minimal);

    auto covers_all = [&](std::uint64_t pick) {
        return std::all_of(edges.begin(), edges.end(),
                           [&](std::uint64_t e) { return (e & pick) != 0; });
    };

    if (edges.empty()) return {NodeCover({}, s), 0};

    for (std::size_t size = 1; size <= m.n; ++size) {
        // Index combination in lexicographic order.
        std::vector<std::size_t> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            std::uint64_t pick = 0;
            for (auto i : comb) pick |= std::uint64_t{1} << i;
            if (covers_all(pick)) {
                std::vector<AttributeId> attrs;
                for (auto i : comb) attrs.push_back(m.attrs[i]);
                return {NodeCover(std::move(attrs), s), size};
            }
            // next combination
            std::size_t j = size;
            while (j > 0 && comb[j - 1] == m.n - size + (j - 1)) --j;
            if (j == 0) break;
            ++comb[j - 1];
            for (std::size_t l = j; l < size; ++l) comb[l] = comb[l - 1] + 1;
        }
    }
    throw DomainError("exact_min_cover: no cover found");  // unreachable: A(S) covers
}

}  // namespace rulesim
