#include "biatsp/assignment.hpp"

#include <limits>

namespace biatsp {

std::vector<int> solve_assignment(const WeightMatrix& cost) {
    const int n = cost.n();
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

    // 1-indexed potentials; p[j] = row matched to column j, p[0] = current row
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = -1;
            std::int64_t delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> perm(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j]) perm[p[j] - 1] = j - 1;
    return perm;
}

}  // namespace biatsp
