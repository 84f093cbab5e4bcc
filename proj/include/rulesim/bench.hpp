#pragma once

// Experiment harness comparing the two cover strategies over a grid of
// generation parameters. Cells run in parallel with buffered output; rows are
// emitted in deterministic grid order, so a fixed base seed gives
// byte-identical CSV.

#include <cmath>
#include <cstdio>
#include <future>
#include <map>
#include <string>
#include <vector>

#include "rulesim/core.hpp"
#include "rulesim/exact.hpp"
#include "rulesim/generate.hpp"
#include "rulesim/io.hpp"
#include "rulesim/simulate.hpp"

namespace rulesim {

struct BenchParams {
    std::size_t attrs = 10;
    std::size_t rules = 10;
    std::size_t min_len = 1;
    std::vector<std::size_t> max_lens{2, 6};  // one grid cell per entry
    std::size_t values = 2;
    std::size_t seeds = 10;   // systems per cell
    std::size_t tuples = 20;  // sampled tuples per system
    bool exact = false;       // add exact depth + bound columns (budget-guarded)
    std::uint64_t base_seed = 1;
    SearchBudget budget;      // applies when exact is set
};

struct BenchOutput {
    std::string csv;      // header + one row per (system, tuple, strategy)
    std::string summary;  // mean/max depth and win counts split by d(S)
};

namespace detail {

struct StrategyStats {
    std::uint64_t count = 0;
    std::uint64_t total_depth = 0;
    std::size_t max_depth = 0;

    void add(std::size_t depth) {
        ++count;
        total_depth += depth;
        max_depth = std::max(max_depth, depth);
    }
    double mean() const { return count == 0 ? 0.0 : double(total_depth) / double(count); }
};

struct CellStats {
    StrategyStats greedy;
    StrategyStats rule;
    std::uint64_t greedy_wins = 0;
    std::uint64_t rule_wins = 0;
    std::uint64_t ties = 0;

    void merge(const CellStats& o) {
        greedy.count += o.greedy.count;
        greedy.total_depth += o.greedy.total_depth;
        greedy.max_depth = std::max(greedy.max_depth, o.greedy.max_depth);
        rule.count += o.rule.count;
        rule.total_depth += o.rule.total_depth;
        rule.max_depth = std::max(rule.max_depth, o.rule.max_depth);
        greedy_wins += o.greedy_wins;
        rule_wins += o.rule_wins;
        ties += o.ties;
    }
};

struct CellResult {
    std::string rows;
    std::map<std::size_t, CellStats> by_d;
};

inline CellResult run_cell(const BenchParams& p, std::size_t cell_index) {
    CellResult result;
    GenParams gen;
    gen.attrs = p.attrs;
    gen.rules = p.rules;
    gen.min_len = p.min_len;
    gen.max_len = p.max_lens[cell_index];
    gen.values = p.values;

    for (std::size_t si = 0; si < p.seeds; ++si) {
        gen.seed = derive_seed(derive_seed(p.base_seed, cell_index), si);
        const RuleSystem system = random_system(gen);
        const Measures m = measures(system);

        std::optional<std::size_t> h_exact;
        std::optional<double> depth_ub;
        if (p.exact) {
            h_exact = exact_min_depth(system, p.budget);
            const double h = static_cast<double>(*h_exact);
            depth_ub = h * h * h * std::log(static_cast<double>(m.k) + 1.0) + h;
        }

        SplitMix64 tuple_rng(derive_seed(gen.seed, 0x7475706c65ULL));
        for (std::size_t ti = 0; ti < p.tuples; ++ti) {
            const ExtendedTuple tuple = random_tuple(m, tuple_rng);
            const auto provider = tuple_provider(tuple);
            const auto greedy = simulate(system, provider, CoverStrategy::greedy);
            const auto rule = simulate(system, provider, CoverStrategy::rule);

            for (const auto* sim : {&greedy, &rule}) {
                CsvRow row;
                row.seed = gen.seed;
                row.n = m.n;
                row.d = m.d;
                row.k = m.k;
                row.rules = system.size();
                row.tuple_id = ti;
                row.strategy = sim == &greedy ? CoverStrategy::greedy : CoverStrategy::rule;
                row.depth = sim->depth;
                row.rounds = sim->rounds.size();
                row.h_exact = h_exact;
                row.depth_ub = depth_ub;
                row.answer_size = sim->answer.size();
                result.rows += to_csv_row(row) + "\n";
            }

            CellStats& stats = result.by_d[m.d];
            stats.greedy.add(greedy.depth);
            stats.rule.add(rule.depth);
            if (greedy.depth < rule.depth)
                ++stats.greedy_wins;
            else if (rule.depth < greedy.depth)
                ++stats.rule_wins;
            else
                ++stats.ties;
        }
    }
    return result;
}

}  // namespace detail

inline BenchOutput run_bench(const BenchParams& p) {
    if (p.max_lens.empty()) throw DomainError("run_bench: no grid cells");
    for (auto len : p.max_lens)
        if (p.min_len < 1 || p.min_len > len || len > p.attrs)
            throw DomainError("run_bench: need 1 <= min_len <= max_len <= attrs in every cell");
    if (p.exact) {
        if (p.attrs > p.budget.max_attrs)
            throw BudgetError("run_bench: attrs " + std::to_string(p.attrs) +
                              " exceed the exact-depth budget of " +
                              std::to_string(p.budget.max_attrs));
        if (p.rules > p.budget.max_rules)
            throw BudgetError("run_bench: rules " + std::to_string(p.rules) +
                              " exceed the exact-depth budget of " +
                              std::to_string(p.budget.max_rules));
        if (p.values > p.budget.max_values)
            throw BudgetError("run_bench: values " + std::to_string(p.values) +
                              " exceed the exact-depth budget of " +
                              std::to_string(p.budget.max_values));
    }

    std::vector<std::future<detail::CellResult>> futures;
    futures.reserve(p.max_lens.size());
    for (std::size_t c = 0; c < p.max_lens.size(); ++c)
        futures.push_back(
            std::async(std::launch::async, [&p, c] { return detail::run_cell(p, c); }));

    BenchOutput out;
    out.csv = csv_header() + "\n";
    std::map<std::size_t, detail::CellStats> by_d;
    for (auto& f : futures) {
        detail::CellResult cell = f.get();
        out.csv += cell.rows;
        for (const auto& [d, stats] : cell.by_d) by_d[d].merge(stats);
    }

    std::string& s = out.summary;
    s = "depth by strategy, split by d(S)  [" + std::to_string(p.max_lens.size()) +
        " cells, " + std::to_string(p.seeds) + " systems/cell, " + std::to_string(p.tuples) +
        " tuples/system]\n";
    s += "d(S)  tuples  greedy mean/max  rule mean/max  greedy wins  rule wins  ties\n";
    for (const auto& [d, st] : by_d) {
        char line[160];
        std::snprintf(line, sizeof line, "%-4zu  %6llu  %11.3f/%-3zu  %9.3f/%-3zu  %11llu  %9llu  %4llu\n",
                      d, static_cast<unsigned long long>(st.greedy.count), st.greedy.mean(),
                      st.greedy.max_depth, st.rule.mean(), st.rule.max_depth,
                      static_cast<unsigned long long>(st.greedy_wins),
                      static_cast<unsigned long long>(st.rule_wins),
                      static_cast<unsigned long long>(st.ties));
        s += line;
    }
    return out;
}

}  // namespace rulesim
