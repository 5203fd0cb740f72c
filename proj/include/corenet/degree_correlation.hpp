#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corenet/graph.hpp"

namespace corenet {

struct DegreeCorrelationRow {
    NodeId k = 0;                            // degree class, k >= 1
    std::uint32_t n_k = 0;                   // nodes with degree exactly k
    double knn_k = 0.0;                      // mean neighbor degree over the class
    std::uint64_t neighbor_degree_total = 0; // integer numerator: sum over the class of
                                             // each node's neighbor-degree sum; satisfies
                                             // knn_k == neighbor_degree_total / (k * n_k)
};

struct AssortativityResult {
    std::optional<double> value;  // Pearson correlation of endpoint degrees, in [-1, 1]
    std::string reason;           // set when value is empty ("no edges", zero variance)
};

struct DegreeCorrelationTable {
    std::vector<DegreeCorrelationRow> rows;  // k ascending, only n_k > 0
    AssortativityResult assortativity;
};

// Per-node neighbor-degree sums S_i = sum_{j in N(i)} k_j. The OpenMP kernel
// writes disjoint slots, so its output is bitwise identical to the serial
// reference for any thread count.
std::vector<std::uint64_t> neighbor_degree_sums(const Graph& g);
std::vector<std::uint64_t> neighbor_degree_sums_serial(const Graph& g);

// k_nn(i) = S_i / k_i; NaN marks degree-0 nodes (undefined).
std::vector<double> knn_per_node(const Graph& g);

// Average nearest-neighbor degree per degree class, plus assortativity.
DegreeCorrelationTable knn_by_degree(const Graph& g);

// Pearson correlation of endpoint degrees over the multiset of directed edge
// occurrences (each undirected edge contributes both orders). Sums are exact
// 64-bit integers; only the final ratio is floating point.
AssortativityResult assortativity(const Graph& g);
AssortativityResult assortativity_serial(const Graph& g);

struct CcdfRow {
    NodeId k = 0;
    double fraction = 0.0;  // nodes with degree >= k, over node_count
};

// Tabulated at k = 0 .. max_degree + 1 inclusive; empty for the empty graph.
std::vector<CcdfRow> degree_ccdf(const Graph& g);

}  // namespace corenet
