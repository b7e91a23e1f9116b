#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lapcs/errors.hpp"
#include "lapcs/solvers.hpp"

namespace lapcs {

namespace {

using Word = std::uint64_t;

class Search {
public:
    Search(const AnnotatedSequence& a1, const AnnotatedSequence& a2, const MatchConstraint& mc,
           const SearchBudget& budget)
        : n1_(a1.size()), n2_(a2.size()), identity_(mc.is_identity()), max_nodes_(budget.max_nodes) {
        for (Pos i = 1; i <= n1_; ++i) {
            for (Pos j = 1; j <= n2_; ++j) {
                if (a1.at(i) == a2.at(j) && mc.allowed(i, j))
                    candidates_.push_back({i, j});
            }
        }
        words_ = (candidates_.size() + 63) / 64;

        // compat_[c] = candidates strictly after c in both coordinates whose
        // pairing with c keeps arcs preserved.
        compat_.assign(candidates_.size() * words_, 0);
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            const auto [i, j] = candidates_[c];
            Word* row = &compat_[c * words_];
            for (std::size_t d = c + 1; d < candidates_.size(); ++d) {
                const auto [k, l] = candidates_[d];
                if (k > i && l > j && a1.has_arc(i, k) == a2.has_arc(j, l))
                    row[d / 64] |= Word{1} << (d % 64);
            }
        }

        const std::size_t depth_cap = static_cast<std::size_t>(std::min(n1_, n2_)) + 2;
        alive_.assign(depth_cap, std::vector<Word>(words_, 0));
        bound_.assign(depth_cap, std::vector<int>(identity_ ? candidates_.size() + 1
                                                            : static_cast<std::size_t>(n1_ + 1) * (n2_ + 1),
                                                  0));
    }

    SolveResult run() {
        for (std::size_t c = 0; c < candidates_.size(); ++c)
            alive_[0][c / 64] |= Word{1} << (c % 64);
        descend(0);

        SolveResult result;
        result.length = static_cast<int>(best_.size());
        result.witness = best_;
        result.stats.solver = "exact_search";
        result.stats.nodes = nodes_;
        result.stats.table_cells = candidates_.size();
        return result;
    }

private:
    bool is_alive(std::size_t depth, std::size_t c) const { return (alive_[depth][c / 64] >> (c % 64)) & 1U; }

    // Longest increasing chain of alive candidates. Returns the root bound and
    // fills bound_[depth] so that chain_after(depth, c) works.
    int compute_bounds(std::size_t depth) {
        std::vector<int>& table = bound_[depth];
        if (identity_) {
            // All identity pairs are mutually increasing: a suffix count.
            int count = 0;
            table[candidates_.size()] = 0;
            for (std::size_t c = candidates_.size(); c-- > 0;) {
                table[c] = count;  // strictly after c
                if (is_alive(depth, c))
                    ++count;
            }
            return count;
        }
        const std::size_t width = static_cast<std::size_t>(n2_) + 1;
        std::fill(table.begin(), table.end(), 0);
        std::vector<char> grid(static_cast<std::size_t>(n1_) * n2_, 0);
        for (std::size_t c = 0; c < candidates_.size(); ++c) {
            if (is_alive(depth, c))
                grid[static_cast<std::size_t>(candidates_[c].i - 1) * n2_ + (candidates_[c].j - 1)] = 1;
        }
        for (std::size_t r = static_cast<std::size_t>(n1_); r-- > 0;) {
            for (std::size_t s = static_cast<std::size_t>(n2_); s-- > 0;) {
                int v = std::max(table[(r + 1) * width + s], table[r * width + s + 1]);
                if (grid[r * n2_ + s])
                    v = std::max(v, 1 + table[(r + 1) * width + s + 1]);
                table[r * width + s] = v;
            }
        }
        return table[0];
    }

    int chain_after(std::size_t depth, std::size_t c) const {
        if (identity_)
            return bound_[depth][c];
        const auto [i, j] = candidates_[c];
        return bound_[depth][static_cast<std::size_t>(i) * (n2_ + 1) + static_cast<std::size_t>(j)];
    }

    // Children are visited in lexicographic order and only strict improvements
    // are recorded, so the first optimum reached is the lexicographically
    // smallest one.
    void descend(std::size_t depth) {
        if (++nodes_ > max_nodes_)
            throw BudgetError("exact_search exceeded node budget of " + std::to_string(max_nodes_));
        if (current_.size() > best_.size())
            best_ = current_;

        const int have = static_cast<int>(current_.size());
        const int best = static_cast<int>(best_.size());
        if (have + compute_bounds(depth) <= best)
            return;

        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = alive_[depth][w];
            while (bits != 0) {
                const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (have + 1 + chain_after(depth, c) <= static_cast<int>(best_.size()))
                    continue;
                const Word* row = &compat_[c * words_];
                for (std::size_t x = 0; x < words_; ++x)
                    alive_[depth + 1][x] = alive_[depth][x] & row[x];
                current_.push_back(candidates_[c]);
                descend(depth + 1);
                current_.pop_back();
            }
        }
    }

    Pos n1_;
    Pos n2_;
    bool identity_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<MatchPair> candidates_;
    std::size_t words_ = 0;
    std::vector<Word> compat_;
    std::vector<std::vector<Word>> alive_;
    std::vector<std::vector<int>> bound_;
    Mapping current_;
    Mapping best_;
};

}  // namespace

SolveResult exact_search(const AnnotatedSequence& a1, const AnnotatedSequence& a2, const MatchConstraint& mc,
                         const SearchBudget& budget) {
    if (mc.is_identity()) {
        const Pos longest = std::max(a1.size(), a2.size());
        if (longest > budget.max_identity_length)
            throw BudgetError("identity-constrained exact_search limited to length " +
                              std::to_string(budget.max_identity_length) + ", got " + std::to_string(longest));
    } else {
        const std::int64_t product = static_cast<std::int64_t>(a1.size()) * a2.size();
        if (product > budget.max_pair_product)
            throw BudgetError("exact_search limited to |s1|*|s2| <= " + std::to_string(budget.max_pair_product) +
                              ", got " + std::to_string(product));
    }
    return Search(a1, a2, mc, budget).run();
}

}  // namespace lapcs
