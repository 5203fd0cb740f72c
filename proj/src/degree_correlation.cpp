#include "corenet/degree_correlation.hpp"

#include <cmath>
#include <limits>

namespace corenet {

std::vector<std::uint64_t> neighbor_degree_sums_serial(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::uint64_t> sums(n, 0);
    for (NodeId v = 0; v < n; ++v) {
        std::uint64_t s = 0;
        for (NodeId u : g.neighbors(v)) s += g.degree(u);
        sums[v] = s;
    }
    return sums;
}

std::vector<std::uint64_t> neighbor_degree_sums(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::uint64_t> sums(n, 0);
    const std::int64_t ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t v = 0; v < ni; ++v) {
        std::uint64_t s = 0;
        for (NodeId u : g.neighbors(static_cast<NodeId>(v))) s += g.degree(u);
        sums[static_cast<std::size_t>(v)] = s;
    }
    return sums;
}

std::vector<double> knn_per_node(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::uint64_t> sums = neighbor_degree_sums(g);
    std::vector<double> knn(n);
    for (NodeId v = 0; v < n; ++v) {
        NodeId d = g.degree(v);
        knn[v] = d == 0 ? std::numeric_limits<double>::quiet_NaN()
                        : static_cast<double>(sums[v]) / static_cast<double>(d);
    }
    return knn;
}

DegreeCorrelationTable knn_by_degree(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::uint64_t> sums = neighbor_degree_sums(g);

    const NodeId max_deg = g.max_degree();
    std::vector<std::uint32_t> count(max_deg + 1, 0);
    std::vector<std::uint64_t> total(max_deg + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
        NodeId d = g.degree(v);
        ++count[d];
        total[d] += sums[v];
    }

    DegreeCorrelationTable table;
    for (NodeId k = 1; k <= max_deg; ++k) {
        if (count[k] == 0) continue;
        DegreeCorrelationRow row;
        row.k = k;
        row.n_k = count[k];
        row.neighbor_degree_total = total[k];
        row.knn_k = static_cast<double>(total[k]) /
                    (static_cast<double>(k) * static_cast<double>(count[k]));
        table.rows.push_back(row);
    }
    table.assortativity = assortativity(g);
    return table;
}

namespace {

// Endpoint-degree moment sums over directed edge occurrences. With symmetric
// marginals the Pearson numerator/denominator reduce to
//   r = (M*Sxy - Sx^2) / (M*Sx2 - Sx^2),  M = 2|E|.
struct EdgeMoments {
    std::uint64_t m = 0;    // directed occurrences
    std::uint64_t sx = 0;   // sum of endpoint degrees
    std::uint64_t sx2 = 0;  // sum of squared endpoint degrees
    std::uint64_t sxy = 0;  // sum of degree products
};

AssortativityResult moments_to_result(const EdgeMoments& mo) {
    if (mo.m == 0) return {std::nullopt, "no edges"};
    // Products reach ~M * maxdeg^4 for the denominator terms; long double's
    // 64-bit mantissa keeps them exact at this tool's scales.
    const long double m = static_cast<long double>(mo.m);
    const long double sx = static_cast<long double>(mo.sx);
    const long double num = m * static_cast<long double>(mo.sxy) - sx * sx;
    const long double den = m * static_cast<long double>(mo.sx2) - sx * sx;
    if (den <= 0) return {std::nullopt, "zero degree variance across edge endpoints"};
    return {static_cast<double>(num / den), ""};
}

}  // namespace

AssortativityResult assortativity_serial(const Graph& g) {
    EdgeMoments mo;
    const NodeId n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        const std::uint64_t du = g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            const std::uint64_t dv = g.degree(v);
            mo.m += 1;
            mo.sx += du;
            mo.sx2 += du * du;
            mo.sxy += du * dv;
        }
    }
    return moments_to_result(mo);
}

AssortativityResult assortativity(const Graph& g) {
    const NodeId n = g.node_count();
    std::uint64_t m = 0, sx = 0, sx2 = 0, sxy = 0;
    const std::int64_t ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) reduction(+ : m, sx, sx2, sxy)
    for (std::int64_t ui = 0; ui < ni; ++ui) {
        const NodeId u = static_cast<NodeId>(ui);
        const std::uint64_t du = g.degree(u);
        for (NodeId v : g.neighbors(u)) {
            const std::uint64_t dv = g.degree(v);
            m += 1;
            sx += du;
            sx2 += du * du;
            sxy += du * dv;
        }
    }
    EdgeMoments mo{m, sx, sx2, sxy};
    return moments_to_result(mo);
}

std::vector<CcdfRow> degree_ccdf(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) return {};

    const NodeId max_deg = g.max_degree();
    std::vector<std::uint64_t> count(max_deg + 2, 0);
    for (NodeId v = 0; v < n; ++v) ++count[g.degree(v)];

    std::vector<CcdfRow> rows(max_deg + 2);
    std::uint64_t at_least = 0;
    for (std::int64_t k = max_deg + 1; k >= 0; --k) {
        at_least += count[static_cast<std::size_t>(k)];
        rows[static_cast<std::size_t>(k)] =
            {static_cast<NodeId>(k), static_cast<double>(at_least) / static_cast<double>(n)};
    }
    return rows;
}

}  // namespace corenet
