#pragma once

// Exhaustive verification over every enumerated small system: simulation
// answers against the realizability oracle, the three depth lower bounds, the
// simulated-depth upper bound for both strategies, witness-tuple isolation,
// round discipline, and depth monotonicity under every restriction.

#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "rulesim/core.hpp"
#include "rulesim/enumerate.hpp"
#include "rulesim/exact.hpp"
#include "rulesim/simulate.hpp"
#include "rulesim/transform.hpp"

namespace rulesim {

// Checks the structural discipline of a finished simulation: depth accounting,
// pairwise-distinct queries, round count at most d(S), and d(S) strictly
// decreasing over the successive restrictions.
inline bool round_discipline_ok(const RuleSystem& s, const SimulationResult& res) {
    if (res.depth != res.trace.size()) return false;
    std::size_t total = 0;
    for (auto r : res.rounds) total += r;
    if (total != res.depth) return false;

    std::set<AttributeId> seen;
    for (const auto& q : res.trace)
        if (!seen.insert(q.attr).second) return false;

    const Measures m = measures(s);
    if (res.rounds.size() > m.d) return false;

    // Replay the rounds and watch d(S) fall.
    EquationSystem alpha;
    std::size_t pos = 0;
    std::size_t prev_d = m.d;
    for (std::size_t i = 0; i < res.rounds.size(); ++i) {
        for (std::size_t j = 0; j < res.rounds[i]; ++j, ++pos)
            alpha.insert(res.trace[pos].attr, res.trace[pos].value);
        const auto next = restricted(s, alpha);
        if (!next) {
            return i + 1 == res.rounds.size();  // empty system ends the run
        }
        const Measures mn = measures(*next);
        if (mn.d >= prev_d) return false;
        prev_d = mn.d;
        if (all_lhs_empty(*next)) return i + 1 == res.rounds.size();
    }
    return false;  // rounds ended while rules still had nonempty left-hand sides
}

struct ExhaustiveReport {
    std::uint64_t systems = 0;
    std::uint64_t simulations = 0;      // per strategy
    std::uint64_t witness_checks = 0;
    std::uint64_t restriction_pairs = 0;

    std::uint64_t answer_mismatches_greedy = 0;  // vs the realizability oracle
    std::uint64_t answer_mismatches_rule = 0;
    std::uint64_t cover_bound_violations = 0;   // h < beta
    std::uint64_t length_bound_violations = 0;  // h < d
    std::uint64_t count_bound_violations = 0;   // h < ln|reduct|/ln(k+1)
    std::uint64_t depth_ub_violations_greedy = 0;
    std::uint64_t depth_ub_violations_rule = 0;  // informational: no guarantee held
    std::uint64_t witness_violations = 0;
    std::uint64_t round_violations = 0;
    std::uint64_t monotonicity_violations = 0;

    // The rule strategy carries no depth-bound guarantee, so its violations
    // do not fail the suite.
    bool all_ok() const {
        return answer_mismatches_greedy == 0 && answer_mismatches_rule == 0 &&
               cover_bound_violations == 0 && length_bound_violations == 0 &&
               count_bound_violations == 0 && depth_ub_violations_greedy == 0 &&
               witness_violations == 0 && round_violations == 0 &&
               monotonicity_violations == 0;
    }

    std::string table() const {
        char buf[2048];
        std::snprintf(
            buf, sizeof buf,
            "systems enumerated                      %10llu\n"
            "simulations per strategy                %10llu\n"
            "check                                     violations\n"
            "answer equals oracle (greedy)           %10llu\n"
            "answer equals oracle (rule)             %10llu\n"
            "depth lower bound: min node cover       %10llu\n"
            "depth lower bound: max rule length      %10llu\n"
            "depth lower bound: reduct counting      %10llu\n"
            "simulated depth <= bound (greedy)       %10llu\n"
            "simulated depth <= bound (rule, info)   %10llu\n"
            "witness tuple isolates its reduct rule  %10llu  (%llu checks)\n"
            "round discipline                        %10llu\n"
            "depth monotone under restriction        %10llu  (%llu pairs)\n"
            "RESULT: %s\n",
            static_cast<unsigned long long>(systems),
            static_cast<unsigned long long>(simulations),
            static_cast<unsigned long long>(answer_mismatches_greedy),
            static_cast<unsigned long long>(answer_mismatches_rule),
            static_cast<unsigned long long>(cover_bound_violations),
            static_cast<unsigned long long>(length_bound_violations),
            static_cast<unsigned long long>(count_bound_violations),
            static_cast<unsigned long long>(depth_ub_violations_greedy),
            static_cast<unsigned long long>(depth_ub_violations_rule),
            static_cast<unsigned long long>(witness_violations),
            static_cast<unsigned long long>(witness_checks),
            static_cast<unsigned long long>(round_violations),
            static_cast<unsigned long long>(monotonicity_violations),
            static_cast<unsigned long long>(restriction_pairs),
            all_ok() ? "PASS" : "FAIL");
        return buf;
    }
};

namespace detail {

// Every consistent equation system over A(S) with values from the extended
// domains: each attribute is absent, one of its values, or star.
template <typename Fn>
void for_each_restriction(const Measures& m, Fn&& fn) {
    std::vector<std::size_t> odo(m.n, 0);  // 0 = absent, 1..|V| values, |V|+1 star
    while (true) {
        EquationSystem alpha;
        for (std::size_t i = 0; i < m.n; ++i) {
            if (odo[i] == 0) continue;
            const auto& vals = m.values.at(m.attrs[i]);
            alpha.insert(m.attrs[i], odo[i] <= vals.size()
                                         ? ExtendedValue::of(vals[odo[i] - 1])
                                         : ExtendedValue::star());
        }
        fn(alpha);
        std::size_t i = m.n;
        while (i > 0) {
            const std::size_t radix = m.values.at(m.attrs[i - 1]).size() + 2;
            if (++odo[i - 1] < radix) break;
            odo[--i] = 0;
        }
        if (i == 0) break;
    }
}

}  // namespace detail

inline ExhaustiveReport run_exhaustive(const EnumParams& params,
                                       const SearchBudget& budget = {},
                                       bool check_restrictions = true) {
    ExhaustiveReport rep;
    SystemEnumerator en(params);
    while (auto sys = en.next()) {
        const RuleSystem& s = *sys;
        const Measures m = measures(s);
        ++rep.systems;

        const std::size_t h = exact_min_depth(s, budget);
        const std::size_t beta = exact_min_cover(s).beta;
        const std::size_t reduct_size = max_reduct(s).size();
        const double lb_count =
            reduct_size == 1 ? 0.0
                             : std::log(double(reduct_size)) / std::log(double(m.k) + 1.0);
        const double depth_ub =
            double(h) * double(h) * double(h) * std::log(double(m.k) + 1.0) + double(h);

        if (h < beta) ++rep.cover_bound_violations;
        if (h < m.d) ++rep.length_bound_violations;
        if (double(h) < lb_count) ++rep.count_bound_violations;

        for (const auto& t : all_tuples(s)) {
            const auto oracle = realizable_rules(s, t);
            if (m.n == 0) {
                ++rep.simulations;  // degenerate case: no queries to make
                if (degenerate_answer(s) != oracle) ++rep.answer_mismatches_greedy;
                continue;
            }
            const auto provider = tuple_provider(t);
            for (auto strategy : {CoverStrategy::greedy, CoverStrategy::rule}) {
                const auto sim = simulate(s, provider, strategy);
                if (strategy == CoverStrategy::greedy) ++rep.simulations;
                if (sim.answer != oracle) {
                    if (strategy == CoverStrategy::greedy)
                        ++rep.answer_mismatches_greedy;
                    else
                        ++rep.answer_mismatches_rule;
                }
                if (!round_discipline_ok(s, sim)) ++rep.round_violations;
                if (double(sim.depth) > depth_ub) {
                    if (strategy == CoverStrategy::greedy)
                        ++rep.depth_ub_violations_greedy;
                    else
                        ++rep.depth_ub_violations_rule;
                }
            }
        }

        const RuleSystem reduct = max_reduct(s);
        for (const auto& r : reduct.rules()) {
            ++rep.witness_checks;
            if (!witness_isolates(s, r.id())) ++rep.witness_violations;
        }

        if (check_restrictions) {
            detail::for_each_restriction(m, [&](const EquationSystem& alpha) {
                ++rep.restriction_pairs;
                if (h < exact_min_depth(restricted(s, alpha), budget))
                    ++rep.monotonicity_violations;
            });
        }
    }
    return rep;
}

}  // namespace rulesim
