#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corenet/graph.hpp"
#include "corenet/rng.hpp"

namespace testsup {

using corenet::Graph;
using corenet::NodeId;

inline Graph make_graph(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels = {}) {
    return Graph::from_edges(n, std::move(edges), std::move(labels));
}

// G(n, p) via the shared engine; deterministic per seed.
inline Graph random_graph(NodeId n, double density, std::uint64_t seed) {
    corenet::SplitMix64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (rng.next_double() < density) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Hub node 0 with `leaves` pendant nodes.
inline Graph star(NodeId leaves) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return make_graph(leaves + 1, std::move(edges));
}

inline Graph path(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

inline Graph complete(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges));
}

// K4 on nodes 0..3 plus a pendant node 4 hanging off node 0.
inline Graph k4_pendant() {
    return make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}});
}

inline std::vector<std::pair<NodeId, NodeId>> edge_list(const Graph& g) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

}  // namespace testsup
