#include <algorithm>
#include <limits>

#include "lapcs/errors.hpp"
#include "lapcs/solvers.hpp"

namespace lapcs {

ConflictGraph::ConflictGraph(const AnnotatedSequence& a1, const AnnotatedSequence& a2) {
    if (a1.size() != a2.size())
        throw InstanceError("conflict graph needs equal lengths, got " + std::to_string(a1.size()) + " and " +
                            std::to_string(a2.size()));
    const Pos n = a1.size();
    is_vertex_.assign(static_cast<std::size_t>(n) + 1, false);
    adjacency_.resize(static_cast<std::size_t>(n) + 1);
    for (Pos p = 1; p <= n; ++p) {
        if (a1.at(p) == a2.at(p)) {
            vertices_.push_back(p);
            is_vertex_[static_cast<std::size_t>(p)] = true;
        }
    }

    std::vector<Arc> diff;
    std::set_symmetric_difference(a1.arcs().begin(), a1.arcs().end(), a2.arcs().begin(), a2.arcs().end(),
                                  std::back_inserter(diff));
    for (const Arc& arc : diff) {
        if (!is_vertex(arc.first) || !is_vertex(arc.second))
            continue;
        edges_.emplace_back(arc.first, arc.second);
        adjacency_[static_cast<std::size_t>(arc.first)].push_back(arc.second);
        adjacency_[static_cast<std::size_t>(arc.second)].push_back(arc.first);
    }
    for (Pos p : vertices_)
        max_degree_ = std::max(max_degree_, static_cast<int>(neighbours(p).size()));
}

ConflictGraph build_conflict_graph(const AnnotatedSequence& a1, const AnnotatedSequence& a2) {
    return ConflictGraph(a1, a2);
}

namespace {

// Lexicographically smallest maximum independent set of a path given in
// walk order. Odd paths have a unique optimum. An even path w[0..2T) has the
// T+1 optima C_t = {w[0], w[2], .., w[2t-2]} u {w[2t+1], .., w[2T-1]}; C_t and
// C_u (t < u) differ exactly on the pairs s in [t, u), and the smaller set is
// the one holding the least element of that difference.
void take_path(const std::vector<Pos>& w, std::vector<Pos>& out) {
    const std::size_t len = w.size();
    if (len % 2 == 1) {
        for (std::size_t x = 0; x < len; x += 2)
            out.push_back(w[x]);
        return;
    }
    const std::size_t pairs = len / 2;
    constexpr Pos none = std::numeric_limits<Pos>::max();
    std::size_t best = pairs;
    Pos diff_min = none;  // least element on [t0, best); always held by C_best
    for (std::size_t t0 = pairs; t0-- > 0;) {
        const Pos even = w[2 * t0];     // held by C_u for u > t0
        const Pos odd = w[2 * t0 + 1];  // held by C_t0
        if (std::min(odd, diff_min) < even) {
            if (odd < diff_min) {
                best = t0;
                diff_min = none;
            }
        } else {
            diff_min = even;
        }
    }
    for (std::size_t s = 0; s < best; ++s)
        out.push_back(w[2 * s]);
    for (std::size_t s = best; s < pairs; ++s)
        out.push_back(w[2 * s + 1]);
}

}  // namespace

SolveResult diagonal_conflict_solve(const AnnotatedSequence& a1, const AnnotatedSequence& a2) {
    const ConflictGraph graph(a1, a2);
    if (graph.max_degree() > 2)
        throw CapabilityError("conflict graph has degree " + std::to_string(graph.max_degree()) +
                              " > 2; use exact_search");

    const std::size_t n = static_cast<std::size_t>(a1.size());
    std::vector<bool> seen(n + 1, false);
    std::vector<Pos> chosen;
    std::vector<Pos> walk;

    auto walk_from = [&](Pos start) {
        walk.clear();
        Pos prev = 0;
        Pos cur = start;
        while (cur != 0 && !seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = true;
            walk.push_back(cur);
            Pos next = 0;
            for (Pos q : graph.neighbours(cur)) {
                if (q != prev && !seen[static_cast<std::size_t>(q)]) {
                    next = q;
                    break;
                }
            }
            prev = cur;
            cur = next;
        }
    };

    // Paths first: start each walk at an endpoint.
    for (Pos p : graph.vertices()) {
        if (!seen[static_cast<std::size_t>(p)] && graph.neighbours(p).size() <= 1) {
            walk_from(p);
            take_path(walk, chosen);
        }
    }
    // Remaining vertices lie on cycles. Visiting in ascending order makes p the
    // least vertex of its cycle; every cycle vertex lies in some optimum, so p
    // is kept and the rest is the path left after removing p and its neighbours.
    for (Pos p : graph.vertices()) {
        if (seen[static_cast<std::size_t>(p)])
            continue;
        walk_from(p);
        chosen.push_back(p);
        if (walk.size() > 3) {
            const std::vector<Pos> rest(walk.begin() + 2, walk.end() - 1);
            take_path(rest, chosen);
        }
    }

    std::sort(chosen.begin(), chosen.end());
    SolveResult result;
    result.length = static_cast<int>(chosen.size());
    result.witness.reserve(chosen.size());
    for (Pos p : chosen)
        result.witness.push_back({p, p});
    result.stats.solver = "conflict_mis";
    result.stats.table_cells = graph.vertices().size() + graph.edges().size();
    return result;
}

}  // namespace lapcs
