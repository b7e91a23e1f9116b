#include <vector>

#include "lapcs/errors.hpp"
#include "lapcs/solvers.hpp"

namespace lapcs {

SolveResult lcs_dp(const std::string& s1, const std::string& s2) {
    const std::size_t n = s1.size();
    const std::size_t m = s2.size();
    const std::size_t width = m + 1;

    // suffix[i * width + j] = LCS length of s1[i..] and s2[j..] (0-based)
    std::vector<int> suffix((n + 1) * width, 0);
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = m; j-- > 0;) {
            suffix[i * width + j] = s1[i] == s2[j]
                                        ? 1 + suffix[(i + 1) * width + j + 1]
                                        : std::max(suffix[(i + 1) * width + j], suffix[i * width + j + 1]);
        }
    }

    SolveResult result;
    result.length = suffix[0];
    result.stats.solver = "lcs_dp";
    result.stats.table_cells = static_cast<std::uint64_t>(suffix.size());

    // Smallest i first, then the first matching j: since suffix values are
    // non-increasing in j, only the first occurrence can keep the optimum.
    std::size_t i = 0;
    std::size_t j = 0;
    int remaining = result.length;
    while (remaining > 0) {
        std::size_t jj = j;
        while (jj < m && s2[jj] != s1[i])
            ++jj;
        if (jj < m && 1 + suffix[(i + 1) * width + jj + 1] == remaining) {
            result.witness.push_back({static_cast<Pos>(i + 1), static_cast<Pos>(jj + 1)});
            j = jj + 1;
            --remaining;
        }
        ++i;
    }
    return result;
}

SolveResult lcs_dp(const AnnotatedSequence& a1, const AnnotatedSequence& a2) {
    if (!a1.arcs().empty() || !a2.arcs().empty())
        throw WrongSolverError("lcs_dp requires both arc sets to be empty");
    return lcs_dp(a1.seq(), a2.seq());
}

}  // namespace lapcs
