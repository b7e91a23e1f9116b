#include <algorithm>
#include <bit>
#include <cstdint>

#include "lapcs/errors.hpp"
#include "lapcs/reductions.hpp"

namespace lapcs {

namespace {

// Vertex v (1-based) is bit v-1. Include-before-exclude branching over
// ascending vertices, recording only strict improvements, finds the
// lexicographically smallest optimum first.
class MisSearch {
public:
    explicit MisSearch(const Graph& g) : n_(g.order()), adjacent_(static_cast<std::size_t>(g.order()), 0) {
        for (const Edge& e : g.edges()) {
            adjacent_[static_cast<std::size_t>(e.u - 1)] |= std::uint32_t{1} << (e.v - 1);
            adjacent_[static_cast<std::size_t>(e.v - 1)] |= std::uint32_t{1} << (e.u - 1);
        }
    }

    IndependentSet run() {
        const std::uint32_t all = n_ == 0 ? 0 : (n_ == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n_) - 1);
        branch(0, all);
        IndependentSet result;
        result.size = std::popcount(best_);
        for (int v = 0; v < n_; ++v) {
            if ((best_ >> v) & 1U)
                result.vertices.push_back(v + 1);
        }
        return result;
    }

private:
    // `open` holds undecided vertices that are still compatible.
    void branch(std::uint32_t chosen, std::uint32_t open) {
        const int have = std::popcount(chosen);
        if (have > best_size_) {
            best_ = chosen;
            best_size_ = have;
        }
        if (open == 0 || have + std::popcount(open) <= best_size_)
            return;
        const int v = std::countr_zero(open);
        const std::uint32_t bit = std::uint32_t{1} << v;
        branch(chosen | bit, open & ~bit & ~adjacent_[static_cast<std::size_t>(v)]);
        branch(chosen, open & ~bit);
    }

    int n_;
    std::vector<std::uint32_t> adjacent_;
    std::uint32_t best_ = 0;
    int best_size_ = -1;
};

}  // namespace

IndependentSet max_independent_set(const Graph& g, const MisBudget& budget) {
    const int limit = std::min(budget.max_vertices, 32);
    if (g.order() > limit)
        throw BudgetError("max_independent_set limited to " + std::to_string(limit) + " vertices, got " +
                          std::to_string(g.order()));
    return MisSearch(g).run();
}

}  // namespace lapcs
