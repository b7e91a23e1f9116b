// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lapcs/errors.hpp"
#include "lapcs/harness.hpp"
#include "lapcs/reductions.hpp"
#include "lapcs/solvers.hpp"
#include "oracles.hpp"

using namespace lapcs;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct RandomInstance {
    AnnotatedSequence a1;
    AnnotatedSequence a2;
};

constexpr StructureLevel kLevels[] = {StructureLevel::Plain, StructureLevel::Chain, StructureLevel::Nested,
                                      StructureLevel::Crossing, StructureLevel::Unlimited};

// 500 instances, |S| <= 12, cycling through every pair of structure levels.
// Every other instance has equal lengths so the identity solver applies.
std::vector<RandomInstance> solver_instances() {
    Rng rng(20240501);
    std::vector<RandomInstance> out;
    for (int idx = 0; idx < 500; ++idx) {
        const StructureLevel l1 = kLevels[idx % 5];
        const StructureLevel l2 = kLevels[(idx / 5) % 5];
        const Pos n1 = static_cast<Pos>(uniform_int(rng, 0, 12));
        const Pos n2 = idx % 2 == 0 ? n1 : static_cast<Pos>(uniform_int(rng, 0, 12));
        const std::string_view alphabet = idx % 3 == 0 ? "a" : (idx % 3 == 1 ? "ab" : "acgu");
        auto a1 = random_annotated(rng, n1, alphabet, l1);
        auto a2 = random_annotated(rng, n2, alphabet, l2);
        out.push_back({std::move(a1), std::move(a2)});
    }
    return out;
}

std::vector<MatchConstraint> constraint_kinds() {
    return {MatchConstraint::unconstrained(), MatchConstraint::fragment(1), MatchConstraint::fragment(2),
            MatchConstraint::fragment(3),     MatchConstraint::diagonal(0), MatchConstraint::diagonal(1),
            MatchConstraint::diagonal(2)};
}

Outcome unary_exact_correspondence() {
    const auto start = Clock::now();
    SweepConfig cfg;
    cfg.theorem = Theorem::One;
    cfg.n_min = 1;
    cfg.n_max = 5;
    const auto result = run_sweep(cfg);
    std::size_t exact = 0;
    std::size_t graphs_n5 = 0;
    for (const auto& row : result.report.rows) {
        if (!row.skipped && row.lapcs_len == row.is_size && row.forward_ok && row.backward_ok)
            ++exact;
        if (row.n == 5 && row.k == 1)
            ++graphs_n5;
    }
    const double secs = seconds_since(start);
    const bool pass = !result.report.rows.empty() && exact == result.report.rows.size() && graphs_n5 == 1024 &&
                      result.spot_mismatches() == 0 && secs < 300.0;
    return {pass, std::to_string(exact) + "/" + std::to_string(result.report.rows.size()) +
                      " rows with lapcs_len == max IS, " + std::to_string(graphs_n5) + " graphs at n=5, " +
                      std::to_string(secs) + "s"};
}

SweepConfig block_sweep_config() {
    SweepConfig cfg;
    cfg.theorem = Theorem::Two;
    cfg.n_min = 1;
    cfg.n_max = 4;
    return cfg;
}

Outcome block_forward_direction() {
    const auto start = Clock::now();
    const auto result = run_sweep(block_sweep_config());
    std::size_t ok = 0;
    for (const auto& row : result.report.rows)
        ok += !row.skipped && row.forward_ok ? 1 : 0;
    const double secs = seconds_since(start);
    const bool pass = !result.report.rows.empty() && ok == result.report.rows.size() && secs < 600.0;
    return {pass, std::to_string(ok) + "/" + std::to_string(result.report.rows.size()) + " rows forward_ok, " +
                      std::to_string(secs) + "s"};
}

Outcome block_backward_audit() {
    const SweepConfig cfg = block_sweep_config();
    const auto first = run_sweep(cfg);
    const auto second = run_sweep(cfg);
    const std::string json1 = sweep_summary_json(cfg, first);
    const std::string json2 = sweep_summary_json(cfg, second);
    const bool reproducible = json1 == json2 && sweep_csv(first.report) == sweep_csv(second.report);

    // Triangle is n=3 with every pair present: mask 0b111.
    const EquivalenceRow* triangle = nullptr;
    for (const auto& row : first.report.rows)
        if (row.graph_id == "n3g7" && row.k == 2)
            triangle = &row;

    bool triangle_ok = false;
    std::string triangle_detail = "triangle row missing";
    if (triangle != nullptr) {
        const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
        const auto inst = reduce_theorem2(k3, 2);
        const int searched = exact_search(inst.first, inst.second, inst.constraint).length;
        const auto conflicts = build_conflict_graph(inst.first, inst.second);
        const int formula = static_cast<int>(conflicts.vertices().size()) -
                            oracle::brute_force_min_vertex_cover(conflicts.vertices(), conflicts.edges());
        triangle_ok = triangle->lapcs_len == searched && searched == formula;
        triangle_detail = "triangle k=2 lapcs_len=" + std::to_string(triangle->lapcs_len) +
                          " exact_search=" + std::to_string(searched) + " formula=" + std::to_string(formula) +
                          " threshold=" + std::to_string(triangle->threshold) +
                          " backward_ok=" + (triangle->backward_ok ? "true" : "false");
    }

    const bool pass = first.report.skipped() == 0 && second.report.skipped() == 0 && reproducible && triangle_ok;
    return {pass, "skipped=" + std::to_string(first.report.skipped()) +
                      ", backward counterexamples=" + std::to_string(first.report.backward_failures()) + "/" +
                      std::to_string(first.report.rows.size()) + ", reproducible=" + (reproducible ? "yes" : "no") +
                      ", " + triangle_detail};
}

Outcome solver_oracle_equivalence(const std::vector<RandomInstance>& instances) {
    const auto start = Clock::now();
    std::size_t comparisons = 0;
    std::size_t mismatches = 0;
    std::size_t lcs_checks = 0;
    std::size_t conflict_checks = 0;
    for (const auto& inst : instances) {
        for (const auto& mc : constraint_kinds()) {
            const SolveResult searched = exact_search(inst.a1, inst.a2, mc);
            if (!is_arc_preserving(searched.witness, inst.a1, inst.a2))
                ++mismatches;
            if (mc.kind() == MatchConstraint::Kind::Unconstrained && inst.a1.arcs().empty() && inst.a2.arcs().empty()) {
                ++comparisons;
                ++lcs_checks;
                mismatches += lcs_dp(inst.a1, inst.a2).length == searched.length ? 0 : 1;
            }
            if (mc.is_identity() && inst.a1.size() == inst.a2.size() &&
                build_conflict_graph(inst.a1, inst.a2).max_degree() <= 2) {
                ++comparisons;
                ++conflict_checks;
                mismatches += diagonal_conflict_solve(inst.a1, inst.a2).length == searched.length ? 0 : 1;
            }
        }
    }
    const double secs = seconds_since(start);
    const bool pass = mismatches == 0 && lcs_checks > 0 && conflict_checks > 0 && secs < 120.0;
    return {pass, std::to_string(comparisons) + " cross-checks (" + std::to_string(lcs_checks) + " lcs_dp, " +
                      std::to_string(conflict_checks) + " conflict solver), " + std::to_string(mismatches) +
                      " mismatches, " + std::to_string(secs) + "s"};
}

Outcome fragment_equals_diagonal(const std::vector<RandomInstance>& instances) {
    std::size_t equal = 0;
    for (const auto& inst : instances) {
        const int f = solve(inst.a1, inst.a2, MatchConstraint::fragment(1)).length;
        const int d = solve(inst.a1, inst.a2, MatchConstraint::diagonal(0)).length;
        equal += f == d ? 1 : 0;
    }
    return {equal == instances.size(), std::to_string(equal) + "/" + std::to_string(instances.size()) + " equal"};
}

Outcome classifier_correctness() {
    Rng rng(777);
    std::size_t agree = 0;
    std::size_t monotone_violations = 0;
    std::size_t deletions = 0;
    for (int idx = 0; idx < 200; ++idx) {
        const Pos n = static_cast<Pos>(uniform_int(rng, 0, 14));
        const AnnotatedSequence a(std::string(static_cast<std::size_t>(n), 'a'), random_arcs(rng, n, kLevels[idx % 5]));
        const std::vector<Arc>& arcs = a.arcs();
        const StructureLevel got = classify_structure(a);
        agree += got == oracle::level(arcs) ? 1 : 0;

        for (std::size_t drop = 0; drop < arcs.size(); ++drop) {
            std::vector<Arc> fewer = arcs;
            fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
            ++deletions;
            for (StructureLevel level : kLevels)
                if (oracle::satisfies(arcs, level) && !oracle::satisfies(fewer, level))
                    ++monotone_violations;
            if (!within(classify_structure(fewer, n), got))
                ++monotone_violations;
        }
    }
    return {agree == 200 && monotone_violations == 0,
            std::to_string(agree) + "/200 agree, " + std::to_string(deletions) + " deletions, " +
                std::to_string(monotone_violations) + " monotonicity violations"};
}

Outcome format_round_trips() {
    Rng rng(4242);
    std::size_t identical = 0;
    for (int idx = 0; idx < 100; ++idx) {
        const Graph g = random_graph(rng, static_cast<int>(uniform_int(rng, 0, 15)), 0.3);
        const std::string graph_text = write_dimacs(g);
        const AnnotatedSequence a = random_annotated(rng, static_cast<Pos>(uniform_int(rng, 0, 30)), "ACGU",
                                                     kLevels[idx % 5]);
        const std::string seq_text = write_annotated(a);
        if (write_dimacs(parse_dimacs(graph_text)) == graph_text && write_annotated(parse_annotated(seq_text)) == seq_text)
            ++identical;
    }
    return {identical == 100, std::to_string(identical) + "/100 graph+sequence pairs byte-identical"};
}

}  // namespace

int main() {
    const auto instances = solver_instances();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 unary reduction exact correspondence (n<=5, all k)", unary_exact_correspondence},
        {"2 block reduction forward direction (n<=4, all k)", block_forward_direction},
        {"3 block reduction backward audit", block_backward_audit},
        {"4 solver oracle equivalence (500 instances)", [&] { return solver_oracle_equivalence(instances); }},
        {"5 fragment(1) == diagonal(0)", [&] { return fragment_equals_diagonal(instances); }},
        {"6 classifier correctness and monotonicity", classifier_correctness},
        {"7 format round trips", format_round_trips},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %s: %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
