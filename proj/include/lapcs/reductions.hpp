#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lapcs/arc_core.hpp"
#include "lapcs/solvers.hpp"

namespace lapcs {

// Vertex labels are 1..n.
using Vertex = int;

struct Edge {
    Vertex u = 0;  // u < v
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph. Edges are normalised to u < v and kept sorted;
/// loops, repeated edges and out-of-range endpoints raise InvalidInputError.
/// Connectivity is not required.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool has_edge(Vertex a, Vertex b) const;
    bool is_connected() const;
    bool is_independent(const std::vector<Vertex>& set) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

struct IndependentSet {
    int size = 0;
    std::vector<Vertex> vertices;  // sorted
};

struct MisBudget {
    int max_vertices = 20;
};

// Exact maximum independent set by branch and bound; the witness is the
// lexicographically smallest optimum. BudgetError when n > max_vertices.
IndependentSet max_independent_set(const Graph& g, const MisBudget& budget = {});

enum class Theorem : std::uint8_t { One = 1, Two = 2 };

enum class ReductionCase : std::uint8_t {
    Unary,       // a^n with the edges as arcs
    SingleBase,  // k > n: both sequences "a", no arcs
    Blocks,      // (b a^n b)^n with bracket and edge arcs
};

struct ReductionInstance {
    AnnotatedSequence first;
    AnnotatedSequence second;
    MatchConstraint constraint = MatchConstraint::fragment(1);
    long threshold = 0;

    Theorem theorem = Theorem::One;
    ReductionCase kind = ReductionCase::Unary;
    Graph source;
    int k = 0;

    // Block width n + 2 of the Blocks construction.
    int block_width() const noexcept { return source.order() + 2; }
};

// S1 = S2 = a^n, P1 = E, P2 empty, threshold k. Requires k >= 1.
ReductionInstance reduce_theorem1(const Graph& g, int k);

// k > n: S1 = S2 = "a" without arcs, threshold k.
// Otherwise S1 = S2 = (b a^n b)^n; both sides carry the bracket arc of every
// block, P1 additionally one arc per edge linking an 'a' of block i with an
// 'a' of block j; threshold k (n + 2). Requires k >= 1.
ReductionInstance reduce_theorem2(const Graph& g, int k);

ReductionInstance reduce(Theorem theorem, const Graph& g, int k);

// Mapping built from an independent set: the identity on every vertex
// position (Unary) or on every position of the chosen blocks (Blocks).
// SingleBase instances yield the empty mapping.
Mapping forward_mapping(const ReductionInstance& inst, const std::vector<Vertex>& independent_set);

struct ExtractedSet {
    std::vector<Vertex> vertices;
    bool independent = true;
    std::vector<Edge> violations;  // edges of the source graph inside `vertices`
};

// Reads a vertex set back from a valid mapping of `inst`. Unary: vertices i
// with (i, i) matched, always independent. Blocks: vertices whose block is
// matched in full; independence is reported, not assumed.
// Throws ValidationError if `m` is not a valid, arc-preserving,
// constraint-satisfying mapping of `inst`.
ExtractedSet extract_independent_set(const ReductionInstance& inst, const Mapping& m);

struct EquivalenceRow {
    std::string graph_id;
    int n = 0;
    int m = 0;
    bool connected = false;
    int k = 0;
    Theorem theorem = Theorem::One;

    int is_size = 0;
    bool is_answer = false;
    int lapcs_len = 0;
    long threshold = 0;
    bool lapcs_answer = false;
    bool forward_ok = false;   // is_answer => lapcs_answer
    bool backward_ok = false;  // lapcs_answer => is_answer
    std::string solver;

    bool skipped = false;
    std::string skip_reason;
};

struct OracleBudgets {
    SearchBudget search;
    MisBudget mis;
};

// One (graph, k) row. Budget errors mark the row skipped instead of throwing.
EquivalenceRow check_equivalence(const Graph& g, int k, Theorem theorem, const OracleBudgets& budgets = {});

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;

    std::size_t skipped() const;
    std::size_t forward_failures() const;
    std::size_t backward_failures() const;
    // Rows that are not skipped and fail either direction, in row order.
    std::vector<EquivalenceRow> counterexamples() const;
};

}  // namespace lapcs
