#include "lapcs/solvers.hpp"

namespace lapcs {

SolveResult solve(const AnnotatedSequence& a1, const AnnotatedSequence& a2, const MatchConstraint& mc,
                  const SearchBudget& budget) {
    if (mc.kind() == MatchConstraint::Kind::Unconstrained && a1.arcs().empty() && a2.arcs().empty())
        return lcs_dp(a1, a2);
    if (mc.is_identity() && a1.size() == a2.size() && build_conflict_graph(a1, a2).max_degree() <= 2)
        return diagonal_conflict_solve(a1, a2);
    return exact_search(a1, a2, mc, budget);
}

}  // namespace lapcs
