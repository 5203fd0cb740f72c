#include "corenet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "corenet/rng.hpp"

namespace corenet {

namespace {

// Average ranks (1-based), ties share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
        i = j + 1;
    }
    return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx <= 0 || syy <= 0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

RankTrend spearman_trend(std::span<const double> x, std::span<const double> y) {
    RankTrend out;
    const std::size_t n = x.size();
    if (n != y.size() || n < 3) return out;

    std::vector<double> rx = average_ranks(x);
    std::vector<double> ry = average_ranks(y);
    double rho = pearson(rx, ry);
    if (std::isnan(rho)) return out;
    out.rho = rho;

    constexpr int kPermutations = 10000;
    SplitMix64 rng(0x5EEDC0DEULL);
    std::vector<double> shuffled = ry;
    int at_most = 0;
    for (int p = 0; p < kPermutations; ++p) {
        for (std::size_t i = shuffled.size() - 1; i > 0; --i)
            std::swap(shuffled[i], shuffled[rng.next_below(i + 1)]);
        if (pearson(rx, shuffled) <= rho) ++at_most;
    }
    out.p_negative = (static_cast<double>(at_most) + 1.0) / (kPermutations + 1.0);
    return out;
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace corenet
