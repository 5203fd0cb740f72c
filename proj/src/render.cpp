#include "corenet/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "corenet/stats.hpp"

namespace corenet {

using ordered_json = nlohmann::ordered_json;

std::string format_sig9(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
    return std::string(buf, ptr);
}

double round_sig9(double value) {
    if (!std::isfinite(value)) return value;
    std::string s = format_sig9(value);
    double out = value;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

std::string digest_string(std::span<const char> bytes) {
    char buf[17];
    std::uint64_t h = fnv1a64(bytes);
    for (int i = 15; i >= 0; --i) {
        buf[i] = "0123456789abcdef"[h & 0xF];
        h >>= 4;
    }
    buf[16] = '\0';
    return std::string("fnv1a64:") + buf;
}

namespace {

const char* kSvgStyle =
    ".frame{fill:none;stroke:#333333;stroke-width:1}"
    ".axis{stroke:#333333;stroke-width:1}"
    ".grid{stroke:#cccccc;stroke-width:0.5}"
    ".tick{font:11px sans-serif;fill:#333333}"
    ".note{font:12px sans-serif;fill:#333333}"
    ".cell{fill:#20304f}"
    ".pt{fill:#20304f}"
    ".core{fill:#2ca02c}"
    ".peri{fill:#1f77b4}"
    ".boundary{stroke:#c0392b;stroke-width:1;stroke-dasharray:4 3}"
    ".refline{stroke:#c0392b;stroke-width:1;stroke-dasharray:5 4}";

std::string svg_open(double width, double height) {
    std::string w = format_sig9(width), h = format_sig9(height);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h +
           "\">\n<style>" + kSvgStyle + "</style>\n";
}

std::string line(double x1, double y1, double x2, double y2, const char* cls) {
    return "<line class=\"" + std::string(cls) + "\" x1=\"" + format_sig9(x1) + "\" y1=\"" +
           format_sig9(y1) + "\" x2=\"" + format_sig9(x2) + "\" y2=\"" + format_sig9(y2) +
           "\"/>\n";
}

std::string text(double x, double y, const char* anchor, const std::string& content,
                 const char* cls = "tick") {
    return "<text class=\"" + std::string(cls) + "\" x=\"" + format_sig9(x) + "\" y=\"" +
           format_sig9(y) + "\" text-anchor=\"" + anchor + "\">" + content + "</text>\n";
}

std::string circle(double cx, double cy, double r, const char* cls) {
    return "<circle class=\"" + std::string(cls) + "\" cx=\"" + format_sig9(cx) + "\" cy=\"" +
           format_sig9(cy) + "\" r=\"" + format_sig9(r) + "\"/>\n";
}

// Decade range [emin, emax] covering positive values, widened to at least one
// full decade.
std::pair<int, int> decade_range(double lo, double hi) {
    int emin = static_cast<int>(std::floor(std::log10(lo)));
    int emax = static_cast<int>(std::ceil(std::log10(hi)));
    if (emax <= emin) emax = emin + 1;
    return {emin, emax};
}

}  // namespace

MatrixPlotSpec degree_ordered_matrix_spec(const Graph& g, std::uint32_t boundary_index,
                                          std::uint32_t cell_px) {
    const NodeId n = g.node_count();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        NodeId da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });

    MatrixPlotSpec spec;
    spec.position.resize(n);
    for (NodeId rank = 0; rank < n; ++rank) spec.position[order[rank]] = rank;
    spec.boundary_index = boundary_index;
    spec.cell_px = cell_px;
    return spec;
}

std::string matrix_plot(const Graph& g, const MatrixPlotSpec& spec) {
    const NodeId n = g.node_count();
    if (n > spec.max_renderable_n)
        throw std::length_error(
            "matrix plot limited to " + std::to_string(spec.max_renderable_n) + " nodes, got " +
            std::to_string(n) + "; render a k-core subgraph (k_core_subgraph) instead");
    if (spec.position.size() != n)
        throw std::invalid_argument("position must have one entry per node");
    if (spec.boundary_index > n)
        throw std::invalid_argument("boundary_index exceeds node count");
    if (spec.cell_px == 0) throw std::invalid_argument("cell_px must be positive");
    std::vector<bool> seen(n, false);
    for (NodeId p : spec.position) {
        if (p >= n || seen[p]) throw std::invalid_argument("position is not a permutation");
        seen[p] = true;
    }

    const double cell = spec.cell_px;
    const double side = static_cast<double>(n) * cell;
    const double ml = 46, mt = 12, mr = 12, mb = 46;
    std::string svg = svg_open(ml + side + mr, mt + side + mb);

    for (NodeId u = 0; u < n; ++u) {
        const double y = mt + spec.position[u] * cell;
        for (NodeId v : g.neighbors(u)) {
            const double x = ml + spec.position[v] * cell;
            svg += "<rect class=\"cell\" x=\"" + format_sig9(x) + "\" y=\"" + format_sig9(y) +
                   "\" width=\"" + format_sig9(cell) + "\" height=\"" + format_sig9(cell) +
                   "\"/>\n";
        }
    }

    svg += "<rect class=\"frame\" x=\"" + format_sig9(ml) + "\" y=\"" + format_sig9(mt) +
           "\" width=\"" + format_sig9(side) + "\" height=\"" + format_sig9(side) + "\"/>\n";

    const double b = mt + spec.boundary_index * cell;
    svg += line(ml, b, ml + side, b, "boundary");
    svg += line(ml + spec.boundary_index * cell, mt, ml + spec.boundary_index * cell, mt + side,
                "boundary");

    // Rank-index ticks at 0, the boundary, and n.
    std::vector<std::uint32_t> ticks{0, spec.boundary_index, n};
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());
    for (std::uint32_t t : ticks) {
        const double px = ml + t * cell;
        const double py = mt + t * cell;
        svg += line(px, mt + side, px, mt + side + 4, "axis");
        svg += text(px, mt + side + 16, "middle", std::to_string(t));
        svg += line(ml - 4, py, ml, py, "axis");
        svg += text(ml - 6, py + 4, "end", std::to_string(t));
    }
    svg += text(ml + side / 2, mt + side + 34, "middle", "node rank (degree descending)", "note");

    svg += "</svg>\n";
    return svg;
}

std::string knn_plot(const DegreeCorrelationTable& table) {
    if (table.rows.empty()) throw std::invalid_argument("knn plot needs a non-empty table");

    const double W = 640, H = 480, ml = 64, mr = 16, mt = 16, mb = 48;
    const double pw = W - ml - mr, ph = H - mt - mb;

    double kmin = table.rows.front().k, kmax = table.rows.front().k;
    double ymin = table.rows.front().knn_k, ymax = table.rows.front().knn_k;
    for (const auto& r : table.rows) {
        kmin = std::min(kmin, static_cast<double>(r.k));
        kmax = std::max(kmax, static_cast<double>(r.k));
        ymin = std::min(ymin, r.knn_k);
        ymax = std::max(ymax, r.knn_k);
    }
    auto [xe0, xe1] = decade_range(kmin, kmax);
    auto [ye0, ye1] = decade_range(ymin, ymax);

    auto map_x = [&](double v) { return ml + (std::log10(v) - xe0) / (xe1 - xe0) * pw; };
    auto map_y = [&](double v) { return mt + ph - (std::log10(v) - ye0) / (ye1 - ye0) * ph; };

    std::string svg = svg_open(W, H);
    for (int e = xe0; e <= xe1; ++e) {
        const double x = map_x(std::pow(10.0, e));
        if (e > xe0 && e < xe1) svg += line(x, mt, x, mt + ph, "grid");
        svg += line(x, mt + ph, x, mt + ph + 4, "axis");
        svg += text(x, mt + ph + 16, "middle", format_sig9(std::pow(10.0, e)));
    }
    for (int e = ye0; e <= ye1; ++e) {
        const double y = map_y(std::pow(10.0, e));
        if (e > ye0 && e < ye1) svg += line(ml, y, ml + pw, y, "grid");
        svg += line(ml - 4, y, ml, y, "axis");
        svg += text(ml - 6, y + 4, "end", format_sig9(std::pow(10.0, e)));
    }
    svg += "<rect class=\"frame\" x=\"" + format_sig9(ml) + "\" y=\"" + format_sig9(mt) +
           "\" width=\"" + format_sig9(pw) + "\" height=\"" + format_sig9(ph) + "\"/>\n";

    for (const auto& r : table.rows)
        svg += circle(map_x(r.k), map_y(r.knn_k), 3, "pt");

    std::string note = table.assortativity.value
                           ? "assortativity = " + format_sig9(*table.assortativity.value)
                           : "assortativity undefined (" + table.assortativity.reason + ")";
    svg += text(ml + 8, mt + 18, "start", note, "note");
    svg += text(ml + pw / 2, H - 10, "middle", "degree k", "note");

    svg += "</svg>\n";
    return svg;
}

std::string scatter_ksn_plot(std::span<const ProfileEntry> profile, double reference_x) {
    if (profile.empty()) throw std::invalid_argument("scatter plot needs a non-empty profile");

    const double W = 640, H = 480, ml = 64, mr = 16, mt = 16, mb = 48;
    const double pw = W - ml - mr, ph = H - mt - mb;

    double kmin = reference_x, kmax = reference_x;
    std::uint32_t ymax = 1;
    for (const auto& e : profile) {
        if (e.degree == 0) continue;
        kmin = std::min(kmin, static_cast<double>(e.degree));
        kmax = std::max(kmax, static_cast<double>(e.degree));
        ymax = std::max(ymax, e.super_links);
    }
    auto [xe0, xe1] = decade_range(kmin, kmax);
    auto map_x = [&](double v) { return ml + (std::log10(v) - xe0) / (xe1 - xe0) * pw; };
    auto map_y = [&](double v) { return mt + ph - v / static_cast<double>(ymax) * ph; };

    std::string svg = svg_open(W, H);
    for (int e = xe0; e <= xe1; ++e) {
        const double x = map_x(std::pow(10.0, e));
        if (e > xe0 && e < xe1) svg += line(x, mt, x, mt + ph, "grid");
        svg += line(x, mt + ph, x, mt + ph + 4, "axis");
        svg += text(x, mt + ph + 16, "middle", format_sig9(std::pow(10.0, e)));
    }
    const std::uint32_t step = std::max<std::uint32_t>(1, (ymax + 4) / 5);
    for (std::uint32_t v = 0; v <= ymax; v += step) {
        const double y = map_y(v);
        if (v > 0 && v < ymax) svg += line(ml, y, ml + pw, y, "grid");
        svg += line(ml - 4, y, ml, y, "axis");
        svg += text(ml - 6, y + 4, "end", std::to_string(v));
    }
    svg += "<rect class=\"frame\" x=\"" + format_sig9(ml) + "\" y=\"" + format_sig9(mt) +
           "\" width=\"" + format_sig9(pw) + "\" height=\"" + format_sig9(ph) + "\"/>\n";

    const double rx = map_x(reference_x);
    svg += line(rx, mt, rx, mt + ph, "refline");
    svg += text(rx + 4, mt + 14, "start", "x = " + format_sig9(reference_x));

    for (const auto& e : profile) {
        if (e.degree == 0) continue;
        svg += circle(map_x(e.degree), map_y(e.super_links), 2.5, e.in_core ? "core" : "peri");
    }

    svg += text(ml + pw / 2, H - 10, "middle", "degree k", "note");
    svg += "</svg>\n";
    return svg;
}

namespace {

ordered_json connectivity_json(const ConnectivityStats& st) {
    ordered_json j;
    j["nodes"] = st.nodes;
    j["edges"] = st.edges;
    j["largest_component"] = st.largest_component;
    j["isolated"] = st.isolated;
    j["components"] = st.components;
    return j;
}

ordered_json matrix_json(const std::vector<double>& m, std::uint32_t size) {
    ordered_json rows = ordered_json::array();
    for (std::uint32_t i = 0; i < size; ++i) {
        ordered_json row = ordered_json::array();
        for (std::uint32_t j = 0; j < size; ++j) row.push_back(round_sig9(m[i * size + j]));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json assortativity_block(const AssortativityResult& r) {
    ordered_json j;
    if (r.value)
        j["assortativity"] = round_sig9(*r.value);
    else {
        j["assortativity"] = nullptr;
        j["reason"] = r.reason;
    }
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string analysis_report(const Graph& g, const ReportParams& params) {
    ordered_json j;
    j["schema"] = kReportSchema;

    ordered_json prov;
    prov["tool_version"] = kToolVersion;
    prov["input_digest"] = params.input_digest;
    ordered_json p;
    p["top_n"] = params.top_n;
    if (params.k)
        p["k"] = *params.k;
    else
        p["k"] = nullptr;
    p["lcc"] = params.lcc_requested;
    prov["parameters"] = std::move(p);
    prov["lcc_applied"] = params.lcc_applied;
    j["provenance"] = std::move(prov);

    ConnectivityStats st = connectivity_stats(g);
    ordered_json jg;
    jg["nodes"] = st.nodes;
    jg["edges"] = st.edges;
    jg["max_degree"] = g.max_degree();
    jg["components"] = st.components;
    jg["largest_component"] = st.largest_component;
    jg["isolated"] = st.isolated;
    j["graph"] = std::move(jg);

    CoreDecomposition cd = core_numbers(g);
    const std::int64_t k_used = params.k.value_or(static_cast<std::int64_t>(cd.k_max));
    if (k_used < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<NodeId> core;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (cd.core_number[v] >= k_used) core.push_back(v);

    ordered_json jk;
    jk["k_max"] = cd.k_max;
    jk["k_used"] = k_used;
    jk["core_size"] = core.size();
    ordered_json shells;
    for (NodeId k = 0; k < cd.shell_sizes.size(); ++k)
        shells[std::to_string(k)] = cd.shell_sizes[k];
    jk["shell_sizes"] = std::move(shells);
    j["kcore"] = std::move(jk);

    DegreeCorrelationTable table = knn_by_degree(g);
    ordered_json jd = assortativity_block(table.assortativity);
    ordered_json knn_rows = ordered_json::array();
    for (const auto& r : table.rows) {
        ordered_json row;
        row["k"] = r.k;
        row["n_k"] = r.n_k;
        row["knn_k"] = round_sig9(r.knn_k);
        knn_rows.push_back(std::move(row));
    }
    jd["knn"] = std::move(knn_rows);
    ordered_json ccdf_rows = ordered_json::array();
    for (const auto& r : degree_ccdf(g)) {
        ordered_json row;
        row["k"] = r.k;
        row["fraction"] = round_sig9(r.fraction);
        ccdf_rows.push_back(std::move(row));
    }
    jd["ccdf"] = std::move(ccdf_rows);
    j["degree_correlation"] = std::move(jd);

    SuperPeerReport sp = build_superpeer_report(g, params.top_n, core);
    ordered_json js;
    js["top_n"] = params.top_n;
    ordered_json super_labels = ordered_json::array();
    for (NodeId s : sp.supers) super_labels.push_back(g.label_or_id(s));
    js["supers"] = std::move(super_labels);
    ordered_json cov;
    cov["covered_nodes"] = sp.coverage.covered_nodes;
    cov["fraction"] = round_sig9(sp.coverage.fraction);
    cov["neighbor_only_nodes"] = sp.coverage.neighbor_only_nodes;
    js["coverage"] = std::move(cov);
    ordered_json ov;
    ov["min_norm"] = matrix_json(sp.overlap.min_norm, sp.overlap.size);
    ov["jaccard"] = matrix_json(sp.overlap.jaccard, sp.overlap.size);
    ordered_json mo = ordered_json::array();
    for (double v : sp.overlap.max_offdiag) mo.push_back(round_sig9(v));
    ov["max_offdiag"] = std::move(mo);
    js["overlap"] = std::move(ov);
    ordered_json prof = ordered_json::array();
    for (const auto& e : sp.profile)
        prof.push_back(ordered_json::array({e.degree, e.super_links, e.in_core ? 1 : 0}));
    js["profile"] = std::move(prof);
    j["superpeers"] = std::move(js);

    RobustnessReport rb = removal_robustness(g, sp.supers);
    ordered_json jr;
    ordered_json removed = ordered_json::array();
    for (NodeId v : rb.removed) removed.push_back(g.label_or_id(v));
    jr["removed"] = std::move(removed);
    jr["before"] = connectivity_json(rb.before);
    jr["after"] = connectivity_json(rb.after);
    j["robustness"] = std::move(jr);

    return dump(j);
}

std::string kcore_json(const Graph& g, const CoreDecomposition& cd, std::int64_t k_used,
                       bool include_members) {
    ordered_json j;
    j["k_max"] = cd.k_max;
    ordered_json shells;
    for (NodeId k = 0; k < cd.shell_sizes.size(); ++k)
        shells[std::to_string(k)] = cd.shell_sizes[k];
    j["shell_sizes"] = std::move(shells);
    j["core_numbers"] = cd.core_number;
    if (include_members) {
        ordered_json members = ordered_json::array();
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (cd.core_number[v] >= k_used) members.push_back(g.label_or_id(v));
        j["k_used"] = k_used;
        j["core_members"] = std::move(members);
    }
    return dump(j);
}

std::string assortativity_json(const AssortativityResult& r) {
    return dump(assortativity_block(r));
}

std::string superpeer_json(const Graph& g, const SuperPeerReport& rep) {
    ordered_json j;
    ordered_json supers = ordered_json::array();
    for (NodeId s : rep.supers) supers.push_back(g.label_or_id(s));
    j["supers"] = std::move(supers);
    ordered_json cov;
    cov["covered_nodes"] = rep.coverage.covered_nodes;
    cov["fraction"] = round_sig9(rep.coverage.fraction);
    cov["neighbor_only_nodes"] = rep.coverage.neighbor_only_nodes;
    j["coverage"] = std::move(cov);
    ordered_json ov;
    ov["min_norm"] = matrix_json(rep.overlap.min_norm, rep.overlap.size);
    ov["jaccard"] = matrix_json(rep.overlap.jaccard, rep.overlap.size);
    ordered_json mo = ordered_json::array();
    for (double v : rep.overlap.max_offdiag) mo.push_back(round_sig9(v));
    ov["max_offdiag"] = std::move(mo);
    j["overlap"] = std::move(ov);
    ordered_json prof = ordered_json::array();
    for (const auto& e : rep.profile)
        prof.push_back(ordered_json::array({e.degree, e.super_links, e.in_core ? 1 : 0}));
    j["profile"] = std::move(prof);
    return dump(j);
}

std::string robustness_json(const Graph& g, const RobustnessReport& rep) {
    ordered_json j;
    ordered_json removed = ordered_json::array();
    for (NodeId v : rep.removed) removed.push_back(g.label_or_id(v));
    j["removed"] = std::move(removed);
    j["before"] = connectivity_json(rep.before);
    j["after"] = connectivity_json(rep.after);
    return dump(j);
}

std::string knn_table_csv(const DegreeCorrelationTable& table) {
    std::string out = "k,n_k,knn_k\n";
    for (const auto& r : table.rows)
        out += std::to_string(r.k) + "," + std::to_string(r.n_k) + "," + format_sig9(r.knn_k) +
               "\n";
    return out;
}

std::string profile_csv(const Graph& g, std::span<const ProfileEntry> profile) {
    std::string out = "node,k,ksn,in_core\n";
    for (const auto& e : profile)
        out += g.label_or_id(e.node) + "," + std::to_string(e.degree) + "," +
               std::to_string(e.super_links) + "," + (e.in_core ? "1" : "0") + "\n";
    return out;
}

}  // namespace corenet
