#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "corenet/graph.hpp"

namespace corenet {

struct CoreDecomposition {
    std::vector<NodeId> core_number;      // per node
    NodeId k_max = 0;
    std::vector<NodeId> shell_sizes;      // index k in [0, k_max]; sums to n
};

// Exact core numbers by bucket peeling. Output is independent of the input's
// node ordering; nodes of equal current degree are peeled in ascending id.
CoreDecomposition core_numbers(const Graph& g);

// Induced subgraph over nodes with core_number >= k; empty when k > k_max.
SubgraphResult k_core_subgraph(const Graph& g, std::int64_t k);
SubgraphResult k_core_subgraph(const Graph& g, const CoreDecomposition& cd, std::int64_t k);

struct CorePeripherySplit {
    std::vector<NodeId> core;        // ascending ids
    std::vector<NodeId> periphery;   // ascending ids
    NodeId k_used = 0;
};

// Core = k-core node set (k defaults to k_max), periphery = complement.
CorePeripherySplit core_periphery_split(const Graph& g, std::optional<std::int64_t> k = {});

}  // namespace corenet
