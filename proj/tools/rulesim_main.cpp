// Command-line front end: generate systems, build covers, simulate the
// decision tree's work on a tuple, compute exact depths, verify the bound
// suite, and run the strategy-comparison benchmark.
//
// Exit codes: 0 success, 1 domain error (bad instance, budget exceeded,
// parse failure), 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rulesim/rulesim.hpp"

namespace {

using namespace rulesim;

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot open output file: " + path);
    out << text;
}

CoverStrategy parse_strategy(const std::string& name) {
    if (name == "greedy") return CoverStrategy::greedy;
    if (name == "rule") return CoverStrategy::rule;
    throw DomainError("unknown strategy: " + name);
}

std::string cover_line(const NodeCover& cover) {
    std::string line = "cover:";
    for (auto a : cover.attributes()) line += " " + to_string(a);
    return line + "\nsize: " + std::to_string(cover.size()) + "\n";
}

void print_bound_report(const BoundReport& rep) {
    std::printf("h_exact:          %zu\n", rep.h_exact);
    std::printf("beta:             %zu  (h >= beta: %s)\n", rep.beta,
                rep.cover_bound_ok ? "ok" : "VIOLATED");
    std::printf("d:                %zu  (h >= d: %s)\n", rep.d,
                rep.length_bound_ok ? "ok" : "VIOLATED");
    std::printf("k:                %zu\n", rep.k);
    std::printf("reduct size:      %zu\n", rep.reduct_size);
    std::printf("count bound:      %.6f  (h >= bound: %s)\n", rep.lb_count,
                rep.count_bound_ok ? "ok" : "VIOLATED");
    std::printf("depth bound:      %.6f\n", rep.depth_ub);
    std::printf("max sim depth:    %zu  (<= depth bound: %s)\n", rep.max_sim_depth,
                rep.sim_depth_ok ? "ok" : "VIOLATED");
    std::printf("RESULT: %s\n", rep.all_ok() ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"greedy decision-tree simulation over decision rule systems"};
    app.set_config("--config", "", "key=value file presetting any flag");
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    bool json = false;
    app.add_option("--seed", seed, "base random seed")->capture_default_str();
    app.add_flag("--json", json, "JSON output where supported");

    int exit_code = 0;

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "generate a random rule system");
    GenParams gen_params;
    std::string gen_output = "-";
    gen_cmd->add_option("--attrs", gen_params.attrs, "attribute pool size")
        ->capture_default_str();
    gen_cmd->add_option("--rules", gen_params.rules, "number of rules")->capture_default_str();
    gen_cmd->add_option("--min-len", gen_params.min_len, "minimum rule length")
        ->capture_default_str();
    gen_cmd->add_option("--max-len", gen_params.max_len, "maximum rule length")
        ->capture_default_str();
    gen_cmd->add_option("--values", gen_params.values, "values per attribute and decisions")
        ->capture_default_str();
    gen_cmd->add_option("--output", gen_output, "output file, '-' for stdout")
        ->capture_default_str();
    gen_cmd->callback([&] {
        gen_params.seed = seed;
        const RuleSystem s = random_system(gen_params);
        std::string text = "# seed=" + std::to_string(seed) + " attrs=" +
                           std::to_string(gen_params.attrs) + " rules=" +
                           std::to_string(gen_params.rules) + " len=" +
                           std::to_string(gen_params.min_len) + ".." +
                           std::to_string(gen_params.max_len) + " values=" +
                           std::to_string(gen_params.values) + "\n";
        write_text(gen_output, text + serialize_rules(s));
    });

    // cover
    auto* cover_cmd = app.add_subcommand("cover", "build a node cover of the rule hypergraph");
    std::string cover_input, cover_method = "greedy";
    std::size_t cover_budget = 20;
    bool dump_graph = false;
    cover_cmd->add_option("--input", cover_input, "rule file")->required();
    cover_cmd->add_option("--method", cover_method, "greedy | rule | exact")
        ->check(CLI::IsMember({"greedy", "rule", "exact"}))
        ->capture_default_str();
    cover_cmd->add_option("--budget", cover_budget, "attribute budget for --method exact")
        ->capture_default_str();
    cover_cmd->add_flag("--dump-graph", dump_graph, "print the hypergraph adjacency first");
    cover_cmd->callback([&] {
        const RuleSystem s = load_rules(cover_input);
        if (dump_graph) std::cout << to_adjacency_text(build_hypergraph(s));
        NodeCover cover = cover_method == "greedy" ? greedy_cover(s)
                          : cover_method == "rule" ? rule_cover(s)
                                                   : exact_min_cover(s, cover_budget).cover;
        if (json) {
            nlohmann::ordered_json j;
            j["method"] = cover_method;
            j["cover"] = nlohmann::ordered_json::array();
            for (auto a : cover.attributes()) j["cover"].push_back(to_string(a));
            j["size"] = cover.size();
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << cover_line(cover);
        }
    });

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "simulate the decision tree on one tuple");
    std::string sim_input, sim_tuple, sim_strategy = "greedy";
    sim_cmd->add_option("--input", sim_input, "rule file")->required();
    sim_cmd->add_option("--tuple", sim_tuple, "tuple string, e.g. \"a1=0,a2=*\"")->required();
    sim_cmd->add_option("--strategy", sim_strategy, "greedy | rule")
        ->check(CLI::IsMember({"greedy", "rule"}))
        ->capture_default_str();
    sim_cmd->callback([&] {
        const RuleSystem s = load_rules(sim_input);
        const ExtendedTuple tuple = parse_tuple(s, sim_tuple);
        SimulationResult res;
        if (measures(s).n == 0)
            res.answer = degenerate_answer(s);  // no queries to make
        else
            res = simulate(s, tuple_provider(tuple), parse_strategy(sim_strategy));
        if (json) {
            std::cout << to_json(res).dump(2) << "\n";
        } else {
            std::cout << "answer:";
            for (auto id : res.answer) std::cout << " " << id;
            std::cout << "\ntrace:";
            for (const auto& q : res.trace)
                std::cout << " " << to_string(q.attr) << "=" << to_string(q.value);
            std::cout << "\nrounds:";
            for (auto r : res.rounds) std::cout << " " << r;
            std::cout << "\ndepth: " << res.depth << "\n";
        }
    });

    // exact-depth
    auto* depth_cmd = app.add_subcommand("exact-depth", "exact minimum decision-tree depth");
    std::string depth_input;
    SearchBudget depth_budget;
    depth_cmd->add_option("--input", depth_input, "rule file")->required();
    depth_cmd->add_option("--max-n", depth_budget.max_attrs, "attribute budget")
        ->capture_default_str();
    depth_cmd->add_option("--max-rules", depth_budget.max_rules, "rule budget")
        ->capture_default_str();
    depth_cmd->add_option("--max-k", depth_budget.max_values, "value-set budget")
        ->capture_default_str();
    depth_cmd->callback([&] {
        const std::size_t h = exact_min_depth(load_rules(depth_input), depth_budget);
        if (json)
            std::cout << "{\"h_exact\": " << h << "}\n";
        else
            std::cout << "h_exact: " << h << "\n";
    });

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "check the depth bounds on one system or exhaustively");
    std::string verify_input;
    bool exhaustive = false;
    EnumParams enum_params;
    SearchBudget verify_budget;
    verify_cmd->add_option("--input", verify_input, "rule file (single-system mode)");
    verify_cmd->add_flag("--exhaustive", exhaustive, "enumerate every small system");
    verify_cmd->add_option("--max-n", enum_params.max_attrs, "enumeration attribute bound")
        ->capture_default_str();
    verify_cmd->add_option("--max-rules", enum_params.max_rules, "enumeration rule bound")
        ->capture_default_str();
    verify_cmd->add_option("--max-len", enum_params.max_len, "enumeration rule-length bound")
        ->capture_default_str();
    verify_cmd->add_option("--values", enum_params.value_count, "enumeration values per attribute")
        ->capture_default_str();
    verify_cmd->add_option("--cap", enum_params.cap, "enumeration stream cap")
        ->capture_default_str();
    verify_cmd->callback([&] {
        if (exhaustive == verify_input.empty()) {  // exactly one mode
            if (exhaustive) {
                const ExhaustiveReport rep = run_exhaustive(enum_params, verify_budget);
                std::cout << rep.table();
                if (!rep.all_ok()) exit_code = 1;
            } else {
                const RuleSystem s = load_rules(verify_input);
                const BoundReport rep = verify_bounds(s, verify_budget);
                print_bound_report(rep);
                bool witnesses_ok = true;
                const RuleSystem reduct = max_reduct(s);
                for (const auto& r : reduct.rules())
                    witnesses_ok = witnesses_ok && witness_isolates(s, r.id());
                std::printf("witness isolation: %s\n", witnesses_ok ? "ok" : "VIOLATED");
                if (!rep.all_ok() || !witnesses_ok) exit_code = 1;
            }
        } else {
            throw CLI::ValidationError("verify", "pass exactly one of --input or --exhaustive");
        }
    });

    // bench
    auto* bench_cmd =
        app.add_subcommand("bench", "compare cover strategies over a parameter grid");
    BenchParams bench_params;
    std::string bench_output = "-";
    bench_cmd->add_option("--attrs", bench_params.attrs, "attribute pool size")
        ->capture_default_str();
    bench_cmd->add_option("--rules", bench_params.rules, "rules per system")
        ->capture_default_str();
    bench_cmd->add_option("--min-len", bench_params.min_len, "minimum rule length")
        ->capture_default_str();
    bench_cmd
        ->add_option("--max-len", bench_params.max_lens,
                     "comma-separated maximum rule lengths, one grid cell each")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--values", bench_params.values, "values per attribute")
        ->capture_default_str();
    bench_cmd->add_option("--seeds", bench_params.seeds, "systems per cell")
        ->capture_default_str();
    bench_cmd->add_option("--tuples", bench_params.tuples, "tuples per system")
        ->capture_default_str();
    bench_cmd->add_flag("--exact", bench_params.exact,
                        "include exact depth and depth-bound columns (budget-guarded)");
    bench_cmd->add_option("--output", bench_output, "CSV file, '-' for stdout")
        ->capture_default_str();
    bench_cmd->callback([&] {
        bench_params.base_seed = seed;
        const BenchOutput out = run_bench(bench_params);
        write_text(bench_output, out.csv);
        std::cerr << out.summary;  // summary goes to stderr, CSV stays machine-readable
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rulesim::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
