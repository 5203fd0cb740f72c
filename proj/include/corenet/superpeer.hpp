#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "corenet/graph.hpp"

namespace corenet {

struct CoverageReport {
    std::uint32_t covered_nodes = 0;        // |supers ∪ their direct neighbors|
    double fraction = 0.0;                  // covered_nodes / node_count
    std::uint32_t neighbor_only_nodes = 0;  // direct neighbors that are not supers
};

// Row-major S x S matrices. min_norm(u,v) = |N(u) ∩ N(v)| / min(|N(u)|,|N(v)|)
// with supers excluded from the neighbor sets first; jaccard uses the union.
// Diagonals are fixed at 1; a 0/0 entry (an excluded set turned empty) is 0.
struct OverlapMatrix {
    std::uint32_t size = 0;
    std::vector<double> min_norm;
    std::vector<double> jaccard;
    std::vector<double> max_offdiag;  // per super, max off-diagonal min_norm entry

    double at(std::uint32_t r, std::uint32_t c) const { return min_norm[r * size + c]; }
};

struct ProfileEntry {
    NodeId node = 0;
    NodeId degree = 0;             // k_i
    std::uint32_t super_links = 0; // |N(i) ∩ supers|
    bool in_core = false;
};

struct SuperPeerReport {
    std::vector<NodeId> supers;
    CoverageReport coverage;
    OverlapMatrix overlap;
    std::vector<ProfileEntry> profile;  // one entry per node, id order
};

struct ConnectivityStats {
    std::uint32_t nodes = 0;
    std::uint64_t edges = 0;
    std::uint32_t largest_component = 0;
    std::uint32_t isolated = 0;
    std::uint32_t components = 0;
};

struct RobustnessReport {
    std::vector<NodeId> removed;
    ConnectivityStats before;
    ConnectivityStats after;
};

// The n highest-degree nodes, degree descending, ties by ascending id.
std::vector<NodeId> top_degree_nodes(const Graph& g, std::uint32_t n);

CoverageReport superpeer_coverage(const Graph& g, std::span<const NodeId> supers);

// Requires every super to have degree >= 1.
OverlapMatrix shared_neighbor_overlap(const Graph& g, std::span<const NodeId> supers);

// Per-node (k_i, super_links, in_core). The OpenMP kernel writes disjoint
// slots; bitwise identical to the serial reference for any thread count.
std::vector<ProfileEntry> superpeer_degree_profile(const Graph& g,
                                                   std::span<const NodeId> supers,
                                                   std::span<const NodeId> core);
std::vector<ProfileEntry> superpeer_degree_profile_serial(const Graph& g,
                                                          std::span<const NodeId> supers,
                                                          std::span<const NodeId> core);

RobustnessReport removal_robustness(const Graph& g, std::span<const NodeId> drop);

ConnectivityStats connectivity_stats(const Graph& g);

// Assembles the full report for the top_n highest-degree nodes, with core
// membership taken from `core`.
SuperPeerReport build_superpeer_report(const Graph& g, std::uint32_t top_n,
                                       std::span<const NodeId> core);

}  // namespace corenet
