#include "biatsp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace biatsp {

namespace {

double nearest_squared(const ObjectiveVector& p, const Front& set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : set.entries) {
        const double dx = static_cast<double>(p.d1 - e.value.d1);
        const double dy = static_cast<double>(p.d2 - e.value.d2);
        best = std::min(best, dx * dx + dy * dy);
    }
    return best;
}

double directed_distance(const Front& from, const Front& to) {
    if (from.empty() || to.empty())
        throw std::invalid_argument("gd/igd: fronts must be non-empty");
    double sum = 0.0;
    for (const auto& e : from.entries) sum += nearest_squared(e.value, to);
    return std::sqrt(sum) / static_cast<double>(from.size());
}

}  // namespace

double gd(const Front& approximation, const Front& reference) {
    return directed_distance(approximation, reference);
}

double igd(const Front& approximation, const Front& reference) {
    return directed_distance(reference, approximation);
}

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    double alpha) {
    if (x.size() != y.size())
        throw std::invalid_argument("wilcoxon: samples must be paired (equal length)");

    std::vector<double> diff;
    diff.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        if (d != 0.0) diff.push_back(d);
    }
    const int n = static_cast<int>(diff.size());

    WilcoxonResult result;
    result.n_used = n;
    if (n < 6) return result;  // inconclusive, flagged via `conclusive`
    result.conclusive = true;

    // mid-ranks of |d|
    std::vector<std::size_t> idx(diff.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(diff[a]) < std::abs(diff[b]);
    });
    std::vector<double> rank(diff.size(), 0.0);
    std::vector<int> tie_sizes;
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j < idx.size() && std::abs(diff[idx[j]]) == std::abs(diff[idx[i]])) ++j;
        const double mid = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) rank[idx[k]] = mid;
        tie_sizes.push_back(static_cast<int>(j - i));
        i = j;
    }

    double w_plus = 0.0, w_minus = 0.0;
    for (std::size_t i = 0; i < diff.size(); ++i)
        (diff[i] > 0 ? w_plus : w_minus) += rank[i];
    result.statistic = std::min(w_plus, w_minus);

    if (n < 20) {
        // exact conditional distribution over all 2^n sign assignments
        const std::uint64_t total = 1ull << n;
        std::uint64_t le = 0, ge = 0;
        const double eps = 1e-9;
        for (std::uint64_t signs = 0; signs < total; ++signs) {
            double w = 0.0;
            for (int i = 0; i < n; ++i)
                if (signs & (1ull << i)) w += rank[i];
            if (w <= w_plus + eps) ++le;
            if (w >= w_plus - eps) ++ge;
        }
        const double p_le = static_cast<double>(le) / static_cast<double>(total);
        const double p_ge = static_cast<double>(ge) / static_cast<double>(total);
        result.p_value = std::min(1.0, 2.0 * std::min(p_le, p_ge));
    } else {
        const double nn = n;
        const double mean = nn * (nn + 1.0) / 4.0;
        double var = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 24.0;
        for (int t : tie_sizes) var -= (static_cast<double>(t) * t * t - t) / 48.0;
        const double z = (result.statistic - mean) / std::sqrt(var);
        result.p_value = std::min(1.0, 2.0 * normal_cdf(z));
    }
    result.significant = result.p_value < alpha;
    return result;
}

}  // namespace biatsp
