// lapcs: command-line front end for arc-annotated sequence comparison and the
// Independent Set reductions.
//
// Exit codes: 0 ok, 1 usage or parse error, 2 budget exceeded (or skipped
// sweep rows), 3 counterexample found (sweep/verify with --strict).

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "lapcs/arc_core.hpp"
#include "lapcs/errors.hpp"
#include "lapcs/harness.hpp"
#include "lapcs/reductions.hpp"
#include "lapcs/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitCounterexample = 3;

lapcs::Theorem to_theorem(int value) { return value == 1 ? lapcs::Theorem::One : lapcs::Theorem::Two; }

int run_classify(const std::string& path) {
    const auto seq = lapcs::parse_annotated(lapcs::read_file(path));
    std::cout << lapcs::to_string(lapcs::classify_structure(seq)) << '\n';
    return kExitOk;
}

int run_solve(const std::string& path1, const std::string& path2, const lapcs::MatchConstraint& mc,
              const lapcs::SearchBudget& budget) {
    const auto a1 = lapcs::parse_annotated(lapcs::read_file(path1));
    const auto a2 = lapcs::parse_annotated(lapcs::read_file(path2));
    const auto result = lapcs::solve(a1, a2, mc, budget);
    std::cout << result.length << '\n';
    for (const auto& [i, j] : result.witness)
        std::cout << i << ' ' << j << '\n';
    return kExitOk;
}

int run_reduce(const std::string& graph_path, int k, int theorem, const std::string& prefix) {
    const auto g = lapcs::parse_dimacs(lapcs::read_file(graph_path));
    const auto inst = lapcs::reduce(to_theorem(theorem), g, k);
    lapcs::write_file(prefix + ".a1.txt", lapcs::write_annotated(inst.first));
    lapcs::write_file(prefix + ".a2.txt", lapcs::write_annotated(inst.second));
    std::cout << "threshold " << inst.threshold << '\n';
    return kExitOk;
}

int run_verify(const std::string& graph_path, int k, int theorem, const lapcs::OracleBudgets& budgets, bool strict) {
    const auto g = lapcs::parse_dimacs(lapcs::read_file(graph_path));
    auto row = lapcs::check_equivalence(g, k, to_theorem(theorem), budgets);
    row.graph_id = graph_path;
    std::cout << lapcs::kSweepCsvHeader << '\n' << lapcs::csv_row(row) << '\n';
    if (row.skipped) {
        std::cerr << "skipped: " << row.skip_reason << '\n';
        return kExitBudget;
    }
    if (strict && !(row.forward_ok && row.backward_ok))
        return kExitCounterexample;
    return kExitOk;
}

int run_sweep(const lapcs::SweepConfig& cfg, const std::string& prefix, bool strict) {
    const auto result = lapcs::run_sweep(cfg);
    lapcs::write_file(prefix + ".csv", lapcs::sweep_csv(result.report));
    lapcs::write_file(prefix + ".json", lapcs::sweep_summary_json(cfg, result));

    const auto& report = result.report;
    std::cout << "rows " << report.rows.size() << '\n'
              << "skipped " << report.skipped() << '\n'
              << "forward_failures " << report.forward_failures() << '\n'
              << "backward_failures " << report.backward_failures() << '\n'
              << "spot_mismatches " << result.spot_mismatches() << '\n';
    if (report.skipped() > 0)
        return kExitBudget;
    if (strict && (report.forward_failures() > 0 || report.backward_failures() > 0 || result.spot_mismatches() > 0))
        return kExitCounterexample;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Longest arc-preserving common subsequence toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t budget_nodes = lapcs::SearchBudget{}.max_nodes;
    app.add_option("--budget-nodes", budget_nodes, "Node limit for exact search")->capture_default_str();

    std::string file1;
    std::string file2;
    std::string graph_file;
    int k = 0;
    int theorem = 1;
    std::string out_prefix;
    bool strict = false;

    auto* classify = app.add_subcommand("classify", "Print the structure level of an annotated sequence");
    classify->add_option("file", file1)->required()->check(CLI::ExistingFile);

    auto* solve_cmd = app.add_subcommand("solve", "Longest arc-preserving common subsequence of two files");
    solve_cmd->add_option("file1", file1)->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("file2", file2)->required()->check(CLI::ExistingFile);
    bool unconstrained = false;
    std::optional<int> fragment;
    std::optional<int> diagonal;
    auto* opt_unc = solve_cmd->add_flag("--unconstrained", unconstrained, "No position constraint (default)");
    auto* opt_frag = solve_cmd->add_option("--fragment", fragment, "c-fragment constraint")->check(CLI::PositiveNumber);
    auto* opt_diag = solve_cmd->add_option("--diagonal", diagonal, "c-diagonal constraint")->check(CLI::NonNegativeNumber);
    opt_unc->excludes(opt_frag, opt_diag);
    opt_frag->excludes(opt_diag);

    auto* reduce_cmd = app.add_subcommand("reduce", "Build a sequence instance from a DIMACS graph");
    reduce_cmd->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);
    reduce_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
    reduce_cmd->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2}));
    reduce_cmd->add_option("--out", out_prefix, "Output prefix (<prefix>.a1.txt, <prefix>.a2.txt)")
        ->default_val("instance");

    auto* verify_cmd = app.add_subcommand("verify", "Check one (graph, k) pair in both directions");
    verify_cmd->add_option("graph", graph_file)->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--theorem", theorem)->required()->check(CLI::IsMember({1, 2}));
    verify_cmd->add_flag("--strict", strict, "Exit 3 when either direction fails");

    auto* sweep_cmd = app.add_subcommand("sweep", "Equivalence sweep over many graphs");
    lapcs::SweepConfig cfg;
    int sweep_theorem = 1;
    std::optional<int> fixed_k;
    std::optional<int> random_count;
    std::optional<std::uint64_t> seed;
    double edge_prob = 0.5;
    std::optional<int> exhaustive_limit;
    sweep_cmd->add_option("--theorem", sweep_theorem)->required()->check(CLI::IsMember({1, 2}));
    sweep_cmd->add_option("--n-min", cfg.n_min)->capture_default_str();
    sweep_cmd->add_option("--n-max", cfg.n_max)->capture_default_str();
    sweep_cmd->add_option("--k", fixed_k, "Fixed k (default: every k in 1..n)")->check(CLI::PositiveNumber);
    auto* opt_random = sweep_cmd->add_option("--random", random_count, "Random graphs per n instead of enumeration")
                           ->check(CLI::NonNegativeNumber);
    auto* opt_seed = sweep_cmd->add_option("--seed", seed, "RNG seed (required with --random)");
    sweep_cmd->add_option("--edge-prob", edge_prob)->capture_default_str()->check(CLI::Range(0.0, 1.0));
    sweep_cmd->add_option("--max-exhaustive", exhaustive_limit, "Override the exhaustive vertex limit");
    sweep_cmd->add_option("--jobs", cfg.jobs)->capture_default_str()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--out", out_prefix, "Output prefix (<prefix>.csv, <prefix>.json)")->default_val("sweep");
    sweep_cmd->add_flag("--strict", strict, "Exit 3 on any counterexample");
    opt_random->needs(opt_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    lapcs::OracleBudgets budgets;
    budgets.search.max_nodes = budget_nodes;

    try {
        if (*classify)
            return run_classify(file1);
        if (*solve_cmd) {
            auto mc = lapcs::MatchConstraint::unconstrained();
            if (fragment)
                mc = lapcs::MatchConstraint::fragment(*fragment);
            else if (diagonal)
                mc = lapcs::MatchConstraint::diagonal(*diagonal);
            return run_solve(file1, file2, mc, budgets.search);
        }
        if (*reduce_cmd)
            return run_reduce(graph_file, k, theorem, out_prefix);
        if (*verify_cmd)
            return run_verify(graph_file, k, theorem, budgets, strict);
        if (*sweep_cmd) {
            cfg.theorem = to_theorem(sweep_theorem);
            cfg.fixed_k = fixed_k;
            cfg.exhaustive_limit = exhaustive_limit;
            cfg.budgets = budgets;
            if (random_count)
                cfg.random = lapcs::SweepConfig::Random{*random_count, edge_prob, *seed};
            return run_sweep(cfg, out_prefix, strict);
        }
    } catch (const lapcs::BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const lapcs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
