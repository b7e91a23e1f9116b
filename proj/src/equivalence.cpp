#include <algorithm>

#include "lapcs/errors.hpp"
#include "lapcs/reductions.hpp"

namespace lapcs {

EquivalenceRow check_equivalence(const Graph& g, int k, Theorem theorem, const OracleBudgets& budgets) {
    EquivalenceRow row;
    row.n = g.order();
    row.m = g.size();
    row.connected = g.is_connected();
    row.k = k;
    row.theorem = theorem;

    try {
        const IndependentSet mis = max_independent_set(g, budgets.mis);
        row.is_size = mis.size;
        row.is_answer = mis.size >= k;

        const ReductionInstance inst = reduce(theorem, g, k);
        row.threshold = inst.threshold;
        const SolveResult solved = solve(inst.first, inst.second, inst.constraint, budgets.search);
        row.lapcs_len = solved.length;
        row.solver = solved.stats.solver;
        row.lapcs_answer = solved.length >= inst.threshold;
    } catch (const BudgetError& e) {
        row.skipped = true;
        row.skip_reason = e.what();
        return row;
    }

    row.forward_ok = !row.is_answer || row.lapcs_answer;
    row.backward_ok = !row.lapcs_answer || row.is_answer;
    return row;
}

std::size_t EquivalenceReport::skipped() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.skipped; }));
}

std::size_t EquivalenceReport::forward_failures() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.skipped && !r.forward_ok; }));
}

std::size_t EquivalenceReport::backward_failures() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.skipped && !r.backward_ok; }));
}

std::vector<EquivalenceRow> EquivalenceReport::counterexamples() const {
    std::vector<EquivalenceRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [](const auto& r) { return !r.skipped && (!r.forward_ok || !r.backward_ok); });
    return out;
}

}  // namespace lapcs
