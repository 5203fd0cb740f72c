#include "corenet/netgen.hpp"

#include <algorithm>
#include <cmath>

#include "corenet/degree_correlation.hpp"
#include "corenet/kcore.hpp"
#include "corenet/rng.hpp"
#include "corenet/stats.hpp"
#include "corenet/superpeer.hpp"

namespace corenet {

namespace {

void validate(const SyntheticConfig& c) {
    if (c.supers < 1) throw std::invalid_argument("supers must be >= 1");
    if (c.nodes <= c.supers) throw std::invalid_argument("nodes must exceed supers");
    if (c.out_degree < 1 || c.out_degree >= c.nodes - 1)
        throw std::invalid_argument("out_degree must be in [1, nodes - 2]");
    if (!(c.bias >= 0.0 && c.bias <= 1.0))
        throw std::invalid_argument("bias must be in [0, 1]");
}

}  // namespace

GeneratedNetwork generate(const SyntheticConfig& config) {
    validate(config);
    const NodeId n = config.nodes;
    const NodeId s = config.supers;
    const double bias = config.bias;
    SplitMix64 rng(config.seed);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(n) * config.out_degree + s);

    // Sparse ring among supers; degenerates to a single edge for s == 2 and
    // nothing for s == 1.
    if (s == 2) edges.emplace_back(0, 1);
    if (s >= 3)
        for (NodeId i = 0; i < s; ++i) edges.emplace_back(i, (i + 1) % s);

    std::vector<NodeId> chosen;  // per-node targets, small
    for (NodeId j = s; j < n; ++j) {
        const NodeId m = j - s;  // ordinary nodes created before j
        const std::uint32_t want =
            std::min<std::uint32_t>(config.out_degree, s + m);  // distinct-target capacity
        chosen.clear();
        std::uint32_t supers_chosen = 0, ords_chosen = 0;
        while (chosen.size() < want) {
            bool want_super = rng.next_double() < bias;
            if (!want_super && ords_chosen == m) want_super = true;  // no ordinary available
            if (want_super && supers_chosen == s) {
                if (bias < 1.0 && ords_chosen < m) continue;  // re-flip can land ordinary
                break;                                        // reachable pool exhausted
            }
            NodeId t = want_super ? static_cast<NodeId>(rng.next_below(s))
                                  : static_cast<NodeId>(s + rng.next_below(m));
            if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) continue;
            chosen.push_back(t);
            (t < s ? supers_chosen : ords_chosen) += 1;
            edges.emplace_back(t, j);
        }
    }

    GeneratedNetwork net;
    net.config = config;
    net.planted_supers.resize(s);
    for (NodeId i = 0; i < s; ++i) net.planted_supers[i] = i;
    net.graph = Graph::from_edges(n, std::move(edges));
    return net;
}

NetworkSummary measure(const GeneratedNetwork& net) {
    const Graph& g = net.graph;
    const NodeId s = static_cast<NodeId>(net.planted_supers.size());

    NetworkSummary sum;
    sum.nodes = g.node_count();
    sum.edges = g.edge_count();

    DegreeCorrelationTable table = knn_by_degree(g);
    sum.assortativity = table.assortativity.value;
    sum.assortativity_reason = table.assortativity.reason;

    CoreDecomposition cd = core_numbers(g);
    sum.k_max = cd.k_max;
    std::vector<NodeId> core;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (cd.core_number[v] >= cd.k_max) core.push_back(v);
    sum.k_max_core_size = static_cast<std::uint32_t>(core.size());

    CoverageReport cov = superpeer_coverage(g, net.planted_supers);
    sum.coverage_fraction = cov.fraction;
    sum.coverage_nodes = cov.covered_nodes;
    sum.neighbor_only_nodes = cov.neighbor_only_nodes;

    std::vector<ProfileEntry> profile = superpeer_degree_profile(g, net.planted_supers, core);
    std::uint64_t link_total = 0;
    std::uint32_t band = 0;
    const NodeId band_lo = net.config.out_degree;
    const NodeId band_hi = net.config.out_degree + 4;
    std::uint32_t ordinary = 0;
    for (NodeId v = s; v < g.node_count(); ++v) {
        ++ordinary;
        link_total += profile[v].super_links;
        if (profile[v].degree >= band_lo && profile[v].degree <= band_hi) ++band;
    }
    sum.mean_super_links_ordinary =
        ordinary == 0 ? 0.0 : static_cast<double>(link_total) / static_cast<double>(ordinary);
    sum.degree_band_fraction =
        ordinary == 0 ? 0.0 : static_cast<double>(band) / static_cast<double>(ordinary);

    std::vector<double> ks, knns;
    for (const auto& row : table.rows) {
        if (row.k >= 16 && row.k <= 100) {
            ks.push_back(static_cast<double>(row.k));
            knns.push_back(row.knn_k);
        }
    }
    RankTrend trend = spearman_trend(ks, knns);
    sum.knn_trend_rho = trend.rho;
    sum.knn_trend_p_negative = trend.p_negative;

    bool overlap_ok = true;
    for (NodeId v : net.planted_supers)
        if (g.degree(v) == 0) overlap_ok = false;
    if (overlap_ok && s > 1) {
        OverlapMatrix om = shared_neighbor_overlap(g, net.planted_supers);
        double total = 0.0;
        for (std::uint32_t i = 0; i < om.size; ++i)
            for (std::uint32_t j = 0; j < om.size; ++j)
                if (i != j) total += om.min_norm[i * om.size + j];
        sum.overlap_offdiag_mean = total / (static_cast<double>(om.size) * (om.size - 1));
    }
    return sum;
}

}  // namespace corenet
