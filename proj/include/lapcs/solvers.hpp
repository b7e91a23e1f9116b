#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lapcs/arc_core.hpp"

namespace lapcs {

struct SolveStats {
    std::string solver;           // "lcs_dp", "conflict_mis" or "exact_search"
    std::uint64_t nodes = 0;      // search nodes visited (exact_search)
    std::uint64_t table_cells = 0;  // DP cells or conflict-graph size
};

/// Result of an exact LAPCS solve.
///
/// `witness` is the lexicographically smallest optimal pair list, so two
/// exact solvers on the same instance return identical witnesses.
struct SolveResult {
    int length = 0;
    Mapping witness;
    bool optimal = true;
    SolveStats stats;
};

// Limits for exact_search. Exceeding any of them raises BudgetError.
struct SearchBudget {
    // |s1| * |s2| ceiling for non-identity constraints.
    std::int64_t max_pair_product = 400;
    // max(|s1|, |s2|) ceiling under Fragment(1) / Diagonal(0).
    int max_identity_length = 64;
    std::uint64_t max_nodes = 50'000'000;
};

// Plain LCS in O(|s1| |s2|). Both arc sets must be empty (WrongSolverError).
SolveResult lcs_dp(const AnnotatedSequence& a1, const AnnotatedSequence& a2);
SolveResult lcs_dp(const std::string& s1, const std::string& s2);

// Positions where the two sequences agree, with an edge {p, q} whenever the
// arc (p, q) belongs to exactly one of the two arc sets.
class ConflictGraph {
public:
    ConflictGraph(const AnnotatedSequence& a1, const AnnotatedSequence& a2);

    const std::vector<Pos>& vertices() const noexcept { return vertices_; }
    // Sorted, first < second.
    const std::vector<std::pair<Pos, Pos>>& edges() const noexcept { return edges_; }
    const std::vector<Pos>& neighbours(Pos p) const { return adjacency_[static_cast<std::size_t>(p)]; }
    bool is_vertex(Pos p) const { return is_vertex_[static_cast<std::size_t>(p)]; }
    int max_degree() const noexcept { return max_degree_; }

private:
    std::vector<Pos> vertices_;
    std::vector<std::pair<Pos, Pos>> edges_;
    std::vector<std::vector<Pos>> adjacency_;  // indexed by position
    std::vector<bool> is_vertex_;
    int max_degree_ = 0;
};

ConflictGraph build_conflict_graph(const AnnotatedSequence& a1, const AnnotatedSequence& a2);

// Identity-constrained (Fragment(1) / Diagonal(0)) solve in linear time,
// valid when the conflict graph has maximum degree <= 2.
// Throws InstanceError on length mismatch, CapabilityError on degree > 2.
SolveResult diagonal_conflict_solve(const AnnotatedSequence& a1, const AnnotatedSequence& a2);

// Branch and bound over match pairs in lexicographic order.
SolveResult exact_search(const AnnotatedSequence& a1, const AnnotatedSequence& a2, const MatchConstraint& mc,
                         const SearchBudget& budget = {});

// Picks lcs_dp, diagonal_conflict_solve or exact_search.
SolveResult solve(const AnnotatedSequence& a1, const AnnotatedSequence& a2, const MatchConstraint& mc,
                  const SearchBudget& budget = {});

}  // namespace lapcs
