#include "corenet/kcore.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace corenet {

// Bucket peeling in the style of Batagelj-Zaversnik: one bucket per current
// degree, nodes below the active level are done. The active level is drained
// through a min-heap on node id so equal-degree ties peel in ascending id;
// inactive buckets use swap-with-back removal. Degrees never drop below the
// active level, so each node passes through exactly one heap.
CoreDecomposition core_numbers(const Graph& g) {
    const NodeId n = g.node_count();
    CoreDecomposition cd;
    cd.core_number.assign(n, 0);
    if (n == 0) return cd;

    const NodeId max_deg = g.max_degree();
    std::vector<NodeId> deg(n);
    std::vector<std::vector<NodeId>> bins(max_deg + 1);
    std::vector<std::uint32_t> pos(n);
    for (NodeId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        pos[v] = static_cast<std::uint32_t>(bins[deg[v]].size());
        bins[deg[v]].push_back(v);
    }

    std::vector<bool> done(n, false);
    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<NodeId>> active;

    for (NodeId k = 0; k <= max_deg; ++k) {
        for (NodeId v : bins[k]) active.push(v);
        bins[k].clear();
        while (!active.empty()) {
            NodeId v = active.top();
            active.pop();
            done[v] = true;
            cd.core_number[v] = k;
            for (NodeId u : g.neighbors(v)) {
                if (done[u] || deg[u] <= k) continue;
                NodeId d = deg[u];
                auto& bucket = bins[d];
                NodeId back = bucket.back();
                bucket[pos[u]] = back;
                pos[back] = pos[u];
                bucket.pop_back();
                deg[u] = d - 1;
                if (deg[u] == k) {
                    active.push(u);
                } else {
                    pos[u] = static_cast<std::uint32_t>(bins[deg[u]].size());
                    bins[deg[u]].push_back(u);
                }
            }
        }
    }

    for (NodeId v = 0; v < n; ++v) cd.k_max = std::max(cd.k_max, cd.core_number[v]);
    cd.shell_sizes.assign(cd.k_max + 1, 0);
    for (NodeId v = 0; v < n; ++v) ++cd.shell_sizes[cd.core_number[v]];
    return cd;
}

SubgraphResult k_core_subgraph(const Graph& g, const CoreDecomposition& cd, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (cd.core_number[v] >= k) keep.push_back(v);
    return induced_subgraph(g, keep);
}

SubgraphResult k_core_subgraph(const Graph& g, std::int64_t k) {
    return k_core_subgraph(g, core_numbers(g), k);
}

CorePeripherySplit core_periphery_split(const Graph& g, std::optional<std::int64_t> k) {
    CoreDecomposition cd = core_numbers(g);
    std::int64_t kk = k.value_or(static_cast<std::int64_t>(cd.k_max));
    if (kk < 0) throw std::invalid_argument("k must be non-negative");

    CorePeripherySplit split;
    split.k_used = static_cast<NodeId>(kk);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (cd.core_number[v] >= kk)
            split.core.push_back(v);
        else
            split.periphery.push_back(v);
    }
    return split;
}

}  // namespace corenet
