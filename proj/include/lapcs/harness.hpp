#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lapcs/arc_core.hpp"
#include "lapcs/reductions.hpp"

namespace lapcs {

// ---------------------------------------------------------------------------
// Text formats
// ---------------------------------------------------------------------------

// Annotated sequence: first non-comment line is the sequence, every later
// non-blank line is "i j" (1-based). Lines starting with '#' are comments.
AnnotatedSequence parse_annotated(std::string_view text);
// Sequence line, then one "i j" line per arc in canonical order.
std::string write_annotated(const AnnotatedSequence& a);

// DIMACS: "p edge n m", then m lines "e i j"; lines starting with 'c' are
// comments. Structural problems raise ParseError, loops and repeated edges
// raise InvalidInputError; both carry the offending line number.
Graph parse_dimacs(std::string_view text);
std::string write_dimacs(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi]; rejection sampling keeps the stream identical
// across standard library implementations.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);
bool bernoulli(Rng& rng, double p);

// Random arc set on n positions drawn to fit `level`; the result may
// classify stricter than requested (e.g. too few arcs).
std::vector<Arc> random_arcs(Rng& rng, Pos n, StructureLevel level);
AnnotatedSequence random_annotated(Rng& rng, Pos n, std::string_view alphabet, StructureLevel level);

Graph random_graph(Rng& rng, int n, double edge_probability);

// Labeled graph on n vertices whose edges are the set bits of `mask` over the
// pairs (1,2), (1,3), .., (1,n), (2,3), .. in that order.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t graph_count(int n);  // 2^(n(n-1)/2)

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepConfig {
    Theorem theorem = Theorem::One;
    int n_min = 1;
    int n_max = 3;
    std::optional<int> fixed_k;  // empty: every k in 1..n

    struct Random {
        int count = 0;  // graphs per n
        double edge_probability = 0.5;
        std::uint64_t seed = 0;
    };
    std::optional<Random> random;  // empty: exhaustive enumeration

    // Explicit graph list; overrides both exhaustive and random sources.
    std::optional<std::vector<std::pair<std::string, Graph>>> graphs;

    OracleBudgets budgets;
    // Exhaustive enumeration ceiling; defaults depend on the theorem.
    std::optional<int> exhaustive_limit;
    int jobs = 1;
    // Every spot_check_stride-th row is recomputed with exact_search; 0 disables.
    int spot_check_stride = 10;
};

// Throws InvalidInputError for bad ranges or exhaustive sizes over the limit.
void validate(const SweepConfig& cfg);
int default_exhaustive_limit(Theorem theorem);

struct SpotCheck {
    std::size_t row = 0;
    int lapcs_len = 0;
    std::optional<int> recomputed;  // empty when exact_search ran out of budget
};

struct SweepResult {
    EquivalenceReport report;
    std::vector<SpotCheck> spot_checks;

    std::size_t spot_mismatches() const;
};

SweepResult run_sweep(const SweepConfig& cfg);

inline constexpr std::string_view kSweepCsvHeader =
    "graph_id,n,m,connected,k,is_answer,lapcs_len,threshold,lapcs_answer,forward_ok,backward_ok";

std::string sweep_csv(const EquivalenceReport& report);
std::string csv_row(const EquivalenceRow& row);
std::string sweep_summary_json(const SweepConfig& cfg, const SweepResult& result);

}  // namespace lapcs
