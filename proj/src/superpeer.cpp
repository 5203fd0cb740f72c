#include "corenet/superpeer.hpp"

#include <algorithm>
#include <numeric>

namespace corenet {

std::vector<NodeId> top_degree_nodes(const Graph& g, std::uint32_t n) {
    if (n < 1 || n > g.node_count())
        throw std::invalid_argument("top-n count " + std::to_string(n) +
                                    " out of range [1, " + std::to_string(g.node_count()) + "]");
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + n, order.end(), [&](NodeId a, NodeId b) {
        NodeId da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    order.resize(n);
    return order;
}

namespace {

// Validates ids and builds a membership bitmap; throws on duplicates.
std::vector<bool> super_bitmap(const Graph& g, std::span<const NodeId> supers) {
    std::vector<bool> is_super(g.node_count(), false);
    for (NodeId s : supers) {
        if (s >= g.node_count())
            throw std::invalid_argument("super id " + std::to_string(s) + " out of range");
        if (is_super[s])
            throw std::invalid_argument("duplicate super id " + std::to_string(s));
        is_super[s] = true;
    }
    return is_super;
}

}  // namespace

CoverageReport superpeer_coverage(const Graph& g, std::span<const NodeId> supers) {
    std::vector<bool> is_super = super_bitmap(g, supers);
    std::vector<bool> covered = is_super;
    for (NodeId s : supers)
        for (NodeId v : g.neighbors(s)) covered[v] = true;

    CoverageReport rep;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!covered[v]) continue;
        ++rep.covered_nodes;
        if (!is_super[v]) ++rep.neighbor_only_nodes;
    }
    rep.fraction = g.node_count() == 0
                       ? 0.0
                       : static_cast<double>(rep.covered_nodes) / static_cast<double>(g.node_count());
    return rep;
}

OverlapMatrix shared_neighbor_overlap(const Graph& g, std::span<const NodeId> supers) {
    std::vector<bool> is_super = super_bitmap(g, supers);
    for (NodeId s : supers)
        if (g.degree(s) == 0)
            throw std::invalid_argument("super node " + std::to_string(s) + " has degree 0");

    const std::uint32_t s_count = static_cast<std::uint32_t>(supers.size());
    // Neighbor sets with supers themselves excluded, kept sorted.
    std::vector<std::vector<NodeId>> nb(s_count);
    for (std::uint32_t i = 0; i < s_count; ++i)
        for (NodeId v : g.neighbors(supers[i]))
            if (!is_super[v]) nb[i].push_back(v);

    OverlapMatrix m;
    m.size = s_count;
    m.min_norm.assign(static_cast<std::size_t>(s_count) * s_count, 0.0);
    m.jaccard.assign(static_cast<std::size_t>(s_count) * s_count, 0.0);
    m.max_offdiag.assign(s_count, 0.0);

    for (std::uint32_t i = 0; i < s_count; ++i) {
        m.min_norm[i * s_count + i] = 1.0;
        m.jaccard[i * s_count + i] = 1.0;
        for (std::uint32_t j = i + 1; j < s_count; ++j) {
            std::size_t inter = 0;
            std::size_t a = 0, b = 0;
            while (a < nb[i].size() && b < nb[j].size()) {
                if (nb[i][a] < nb[j][b])
                    ++a;
                else if (nb[i][a] > nb[j][b])
                    ++b;
                else {
                    ++inter;
                    ++a;
                    ++b;
                }
            }
            std::size_t smaller = std::min(nb[i].size(), nb[j].size());
            std::size_t unions = nb[i].size() + nb[j].size() - inter;
            double mn = smaller == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(smaller);
            double jc = unions == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(unions);
            m.min_norm[i * s_count + j] = m.min_norm[j * s_count + i] = mn;
            m.jaccard[i * s_count + j] = m.jaccard[j * s_count + i] = jc;
        }
    }
    for (std::uint32_t i = 0; i < s_count; ++i) {
        double best = 0.0;
        for (std::uint32_t j = 0; j < s_count; ++j)
            if (j != i) best = std::max(best, m.min_norm[i * s_count + j]);
        m.max_offdiag[i] = best;
    }
    return m;
}

std::vector<ProfileEntry> superpeer_degree_profile_serial(const Graph& g,
                                                          std::span<const NodeId> supers,
                                                          std::span<const NodeId> core) {
    std::vector<bool> is_super = super_bitmap(g, supers);
    std::vector<bool> in_core(g.node_count(), false);
    for (NodeId v : core) {
        if (v >= g.node_count())
            throw std::invalid_argument("core id " + std::to_string(v) + " out of range");
        in_core[v] = true;
    }

    const NodeId n = g.node_count();
    std::vector<ProfileEntry> profile(n);
    for (NodeId v = 0; v < n; ++v) {
        std::uint32_t links = 0;
        for (NodeId u : g.neighbors(v)) links += is_super[u] ? 1 : 0;
        profile[v] = {v, g.degree(v), links, in_core[v]};
    }
    return profile;
}

std::vector<ProfileEntry> superpeer_degree_profile(const Graph& g,
                                                   std::span<const NodeId> supers,
                                                   std::span<const NodeId> core) {
    std::vector<bool> is_super = super_bitmap(g, supers);
    std::vector<bool> in_core(g.node_count(), false);
    for (NodeId v : core) {
        if (v >= g.node_count())
            throw std::invalid_argument("core id " + std::to_string(v) + " out of range");
        in_core[v] = true;
    }

    const NodeId n = g.node_count();
    std::vector<ProfileEntry> profile(n);
    const std::int64_t ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t vi = 0; vi < ni; ++vi) {
        const NodeId v = static_cast<NodeId>(vi);
        std::uint32_t links = 0;
        for (NodeId u : g.neighbors(v)) links += is_super[u] ? 1 : 0;
        profile[static_cast<std::size_t>(vi)] = {v, g.degree(v), links, in_core[v]};
    }
    return profile;
}

ConnectivityStats connectivity_stats(const Graph& g) {
    ConnectivityStats st;
    st.nodes = g.node_count();
    st.edges = g.edge_count();
    if (g.node_count() == 0) return st;
    ComponentPartition part = connected_components(g);
    st.components = static_cast<std::uint32_t>(part.component_sizes.size());
    st.largest_component = part.component_sizes.empty() ? 0 : part.component_sizes.front();
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0) ++st.isolated;
    return st;
}

RobustnessReport removal_robustness(const Graph& g, std::span<const NodeId> drop) {
    // Reuse the bitmap validation (range + duplicates).
    super_bitmap(g, drop);

    RobustnessReport rep;
    rep.removed.assign(drop.begin(), drop.end());
    rep.before = connectivity_stats(g);
    rep.after = connectivity_stats(remove_nodes(g, drop).graph);
    return rep;
}

SuperPeerReport build_superpeer_report(const Graph& g, std::uint32_t top_n,
                                       std::span<const NodeId> core) {
    SuperPeerReport rep;
    rep.supers = top_degree_nodes(g, top_n);
    rep.coverage = superpeer_coverage(g, rep.supers);
    rep.overlap = shared_neighbor_overlap(g, rep.supers);
    rep.profile = superpeer_degree_profile(g, rep.supers, core);
    return rep;
}

}  // namespace corenet
