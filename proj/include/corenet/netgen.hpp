#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corenet/graph.hpp"

namespace corenet {

// Default attachment bias; see docs/calibration.md for the sweep that
// selected it.
inline constexpr double kCalibratedBias = 0.55;

struct SyntheticConfig {
    std::uint32_t nodes = 4837;       // n
    std::uint32_t supers = 14;        // s, planted hub count
    std::uint32_t out_degree = 8;     // connections each ordinary node opens
    double bias = kCalibratedBias;    // probability an outgoing draw targets a super
    std::uint64_t seed = 1;
};

struct GeneratedNetwork {
    Graph graph;
    std::vector<NodeId> planted_supers;  // always ids 0..s-1
    SyntheticConfig config;
};

// Deterministic hub-dominated topology: supers wired in a sparse ring, then
// each ordinary node (in id order) draws `out_degree` distinct targets —
// each draw hits a uniform super with probability `bias`, otherwise a uniform
// previously created ordinary node (supers when none exist yet). Identical
// configs produce byte-identical graphs.
GeneratedNetwork generate(const SyntheticConfig& config);

// Flat summary record used by calibration and acceptance checks. The knn
// trend fields cover degree classes k in [16, 100]; the degree band counts
// ordinary nodes with degree in [out_degree, out_degree + 4].
struct NetworkSummary {
    std::uint32_t nodes = 0;
    std::uint64_t edges = 0;
    NodeId k_max = 0;
    std::uint32_t k_max_core_size = 0;
    std::optional<double> assortativity;
    std::string assortativity_reason;
    double coverage_fraction = 0.0;
    std::uint32_t coverage_nodes = 0;
    std::uint32_t neighbor_only_nodes = 0;
    double mean_super_links_ordinary = 0.0;
    double degree_band_fraction = 0.0;
    std::optional<double> knn_trend_rho;
    double knn_trend_p_negative = 1.0;
    double overlap_offdiag_mean = 0.0;
};

NetworkSummary measure(const GeneratedNetwork& net);

}  // namespace corenet
