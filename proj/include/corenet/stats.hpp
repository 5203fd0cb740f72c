#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace corenet {

struct RankTrend {
    std::optional<double> rho;  // Spearman rank correlation; empty below 3 points
                                // or under zero rank variance
    double p_negative = 1.0;    // one-sided permutation p-value for rho < 0
};

// Spearman rank correlation with average ranks for ties. The p-value comes
// from a seeded permutation test (fixed internal seed, 10000 shuffles), so
// repeated calls on the same data give identical results.
RankTrend spearman_trend(std::span<const double> x, std::span<const double> y);

// FNV-1a 64-bit digest, used for input provenance.
std::uint64_t fnv1a64(std::span<const char> bytes);

}  // namespace corenet
