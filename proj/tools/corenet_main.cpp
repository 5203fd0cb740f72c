#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "corenet/degree_correlation.hpp"
#include "corenet/graph.hpp"
#include "corenet/kcore.hpp"
#include "corenet/netgen.hpp"
#include "corenet/render.hpp"
#include "corenet/superpeer.hpp"

namespace {

using namespace corenet;

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read input file: " + path);
        ss << in.rdbuf();
    }
    return ss.str();
}

// Relative output paths land under $CORENET_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char* dir = std::getenv("CORENET_OUT_DIR")) p = std::filesystem::path(dir) / p;
    return p;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content << std::flush;
        return;
    }
    const std::filesystem::path p = resolve_out(path);
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + p.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + p.string());
}

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

struct LoadedGraph {
    Graph graph;
    ParseStats stats;
    std::string digest;
    bool lcc_applied = false;
};

LoadedGraph load_graph(const std::string& input, bool lcc) {
    const std::string text = read_input(input);
    LoadedGraph out;
    out.digest = digest_string({text.data(), text.size()});
    ParsedGraph parsed = parse_edge_list(text);
    out.stats = parsed.stats;
    if (lcc) {
        out.graph = largest_component_subgraph(parsed.graph).graph;
        out.lcc_applied = true;
    } else {
        out.graph = std::move(parsed.graph);
    }
    return out;
}

std::vector<NodeId> core_node_set(const CoreDecomposition& cd, std::int64_t k) {
    std::vector<NodeId> core;
    for (NodeId v = 0; v < cd.core_number.size(); ++v)
        if (cd.core_number[v] >= k) core.push_back(v);
    return core;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Core-periphery analysis toolkit for peer-to-peer overlay graphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);
    app.footer(
        "Pass '-' as an input or output path to use stdin/stdout.\n"
        "Relative output paths resolve under $CORENET_OUT_DIR when it is set.");

    int threads = 0;
    const auto add_threads = [&threads](CLI::App* cmd) {
        cmd->add_option("--threads", threads,
                        "Parallelism ceiling for the analysis passes (default: all cores)")
            ->check(CLI::PositiveNumber);
    };

    // --- ingest ---
    struct {
        std::string input;
        std::string out = "-";
    } ingest;
    auto* c_ingest = app.add_subcommand("ingest", "Validate and normalize an edge list");
    c_ingest->add_option("--input", ingest.input, "Edge-list file, or '-' for stdin")->required();
    c_ingest->add_option("--out", ingest.out, "Normalized edge-list destination, or '-' for stdout")
        ->capture_default_str();
    c_ingest->callback([&] {
        const std::string text = read_input(ingest.input);
        const ParsedGraph parsed = parse_edge_list(text);
        std::cerr << "ingest: " << parsed.graph.node_count() << " nodes, "
                  << parsed.graph.edge_count() << " edges, " << parsed.stats.duplicate_edges
                  << " duplicate edges dropped, " << parsed.stats.self_loops
                  << " self-loops dropped\n";
        write_output(ingest.out, serialize_edge_list(parsed.graph));
    });

    // --- analyze ---
    struct {
        std::string input;
        std::string out = "-";
        std::uint32_t top_n = 14;
        std::optional<std::int64_t> k;
        bool lcc = false;
    } an;
    auto* c_an = app.add_subcommand("analyze", "Full analysis report (JSON)");
    c_an->add_option("--input", an.input, "Edge-list file, or '-' for stdin")->required();
    c_an->add_option("--out", an.out, "Report destination, or '-' for stdout")
        ->capture_default_str();
    c_an->add_option("--top-n", an.top_n,
                     "Super-peer count: the N highest-degree nodes (must not exceed node count)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_an->add_option("--k", an.k, "Core threshold; defaults to the maximum core k_max")
        ->check(CLI::NonNegativeNumber);
    c_an->add_flag("--lcc", an.lcc, "Restrict analysis to the largest connected component");
    add_threads(c_an);
    c_an->callback([&] {
        apply_threads(threads);
        const LoadedGraph lg = load_graph(an.input, an.lcc);
        ReportParams params;
        params.top_n = an.top_n;
        params.k = an.k;
        params.lcc_requested = an.lcc;
        params.lcc_applied = lg.lcc_applied;
        params.input_digest = lg.digest;
        write_output(an.out, analysis_report(lg.graph, params));
    });

    // --- kcore ---
    struct {
        std::string input;
        std::string out = "-";
        std::optional<std::int64_t> k;
        bool members = false;
        bool lcc = false;
    } kc;
    auto* c_kc = app.add_subcommand("kcore", "Core decomposition (JSON)");
    c_kc->add_option("--input", kc.input, "Edge-list file, or '-' for stdin")->required();
    c_kc->add_option("--out", kc.out, "Destination, or '-' for stdout")->capture_default_str();
    c_kc->add_option("--k", kc.k, "Core threshold for the member list; defaults to k_max")
        ->check(CLI::NonNegativeNumber);
    c_kc->add_flag("--members", kc.members, "Include the k-core member labels");
    c_kc->add_flag("--lcc", kc.lcc, "Restrict to the largest connected component first");
    c_kc->callback([&] {
        const LoadedGraph lg = load_graph(kc.input, kc.lcc);
        const CoreDecomposition cd = core_numbers(lg.graph);
        const std::int64_t k_used = kc.k.value_or(static_cast<std::int64_t>(cd.k_max));
        write_output(kc.out, kcore_json(lg.graph, cd, k_used, kc.members));
    });

    // --- knn ---
    struct {
        std::string input;
        std::string out = "-";
        std::string format = "csv";
        bool lcc = false;
    } kn;
    auto* c_kn = app.add_subcommand(
        "knn", "Average nearest-neighbor degree per degree class, plus assortativity");
    c_kn->add_option("--input", kn.input, "Edge-list file, or '-' for stdin")->required();
    c_kn->add_option("--out", kn.out, "Destination, or '-' for stdout")->capture_default_str();
    c_kn->add_option("--format", kn.format,
                     "csv: the (k, n_k, knn_k) table; json: the assortativity scalar block")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    c_kn->add_flag("--lcc", kn.lcc, "Restrict to the largest connected component first");
    add_threads(c_kn);
    c_kn->callback([&] {
        apply_threads(threads);
        const LoadedGraph lg = load_graph(kn.input, kn.lcc);
        const DegreeCorrelationTable table = knn_by_degree(lg.graph);
        write_output(kn.out, kn.format == "csv" ? knn_table_csv(table)
                                                : assortativity_json(table.assortativity));
    });

    // --- superpeers ---
    struct {
        std::string input;
        std::string out = "-";
        std::uint32_t top_n = 14;
        std::optional<std::int64_t> k;
        std::string format = "json";
        bool lcc = false;
    } sp;
    auto* c_sp = app.add_subcommand("superpeers",
                                    "Super-peer coverage, neighbor overlap, and degree profile");
    c_sp->add_option("--input", sp.input, "Edge-list file, or '-' for stdin")->required();
    c_sp->add_option("--out", sp.out, "Destination, or '-' for stdout")->capture_default_str();
    c_sp->add_option("--top-n", sp.top_n,
                     "Super-peer count: the N highest-degree nodes (must not exceed node count)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_sp->add_option("--k", sp.k, "Core threshold for in-core flags; defaults to k_max")
        ->check(CLI::NonNegativeNumber);
    c_sp->add_option("--format", sp.format,
                     "json: full report; csv: the per-node (node, k, ksn, in_core) profile")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    c_sp->add_flag("--lcc", sp.lcc, "Restrict to the largest connected component first");
    add_threads(c_sp);
    c_sp->callback([&] {
        apply_threads(threads);
        const LoadedGraph lg = load_graph(sp.input, sp.lcc);
        const CoreDecomposition cd = core_numbers(lg.graph);
        const std::int64_t k_used = sp.k.value_or(static_cast<std::int64_t>(cd.k_max));
        const std::vector<NodeId> core = core_node_set(cd, k_used);
        const SuperPeerReport rep = build_superpeer_report(lg.graph, sp.top_n, core);
        write_output(sp.out, sp.format == "json" ? superpeer_json(lg.graph, rep)
                                                 : profile_csv(lg.graph, rep.profile));
    });

    // --- robustness ---
    struct {
        std::string input;
        std::string out = "-";
        std::uint32_t top_n = 14;
        bool lcc = false;
    } rb;
    auto* c_rb = app.add_subcommand("robustness",
                                    "Connectivity before/after removing the top-N super-peers");
    c_rb->add_option("--input", rb.input, "Edge-list file, or '-' for stdin")->required();
    c_rb->add_option("--out", rb.out, "Destination, or '-' for stdout")->capture_default_str();
    c_rb->add_option("--top-n", rb.top_n,
                     "Super-peer count: the N highest-degree nodes (must not exceed node count)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_rb->add_flag("--lcc", rb.lcc, "Restrict to the largest connected component first");
    c_rb->callback([&] {
        const LoadedGraph lg = load_graph(rb.input, rb.lcc);
        const std::vector<NodeId> supers = top_degree_nodes(lg.graph, rb.top_n);
        write_output(rb.out, robustness_json(lg.graph, removal_robustness(lg.graph, supers)));
    });

    // --- gen ---
    struct {
        std::uint32_t nodes = 4837;
        std::uint32_t supers = 14;
        std::uint32_t dout = 8;
        double bias = kCalibratedBias;
        std::uint64_t seed = 1;
        std::string out = "-";
        std::string truth;
    } gn;
    auto* c_gn = app.add_subcommand("gen", "Generate a synthetic hub-dominated overlay topology");
    c_gn->add_option("--nodes", gn.nodes, "Total node count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_gn->add_option("--supers", gn.supers, "Planted super-peer count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_gn->add_option("--dout", gn.dout, "Connections each ordinary node opens")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_gn->add_option("--bias", gn.bias, "Probability an outgoing draw targets a super-peer")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    c_gn->add_option("--seed", gn.seed, "Generator seed")->capture_default_str();
    c_gn->add_option("--out", gn.out, "Edge-list destination, or '-' for stdout")
        ->capture_default_str();
    c_gn->add_option("--truth", gn.truth, "Also write the planted super labels, one per line");
    c_gn->callback([&] {
        if (gn.nodes <= gn.supers)
            throw CLI::ValidationError("gen: --nodes must exceed --supers");
        if (gn.dout > gn.nodes - 2)
            throw CLI::ValidationError("gen: --dout must be at most --nodes - 2");
        SyntheticConfig cfg;
        cfg.nodes = gn.nodes;
        cfg.supers = gn.supers;
        cfg.out_degree = gn.dout;
        cfg.bias = gn.bias;
        cfg.seed = gn.seed;
        const GeneratedNetwork net = generate(cfg);
        write_output(gn.out, serialize_edge_list(net.graph));
        if (!gn.truth.empty()) {
            std::string lines;
            for (NodeId s : net.planted_supers) lines += net.graph.label_or_id(s) + "\n";
            write_output(gn.truth, lines);
        }
    });

    // --- render ---
    auto* c_r = app.add_subcommand("render", "Emit SVG figures");
    c_r->require_subcommand(1);

    struct {
        std::string input;
        std::string out = "-";
        std::optional<std::int64_t> k;
        bool zoom = false;
        std::uint32_t cell_px = 4;
        bool lcc = false;
    } rm;
    auto* c_rm = c_r->add_subcommand(
        "matrix", "Degree-ordered adjacency matrix with the core boundary marked");
    c_rm->add_option("--input", rm.input, "Edge-list file, or '-' for stdin")->required();
    c_rm->add_option("--out", rm.out, "Destination, or '-' for stdout")->capture_default_str();
    c_rm->add_option("--k", rm.k, "Core threshold for the boundary; defaults to k_max")
        ->check(CLI::NonNegativeNumber);
    c_rm->add_flag("--zoom-core", rm.zoom,
                   "Render only the k-core subgraph (its own deepest core marked)");
    c_rm->add_option("--cell-px", rm.cell_px, "Cell edge length in pixels")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_rm->add_flag("--lcc", rm.lcc, "Restrict to the largest connected component first");
    c_rm->callback([&] {
        const LoadedGraph lg = load_graph(rm.input, rm.lcc);
        const CoreDecomposition cd = core_numbers(lg.graph);
        const std::int64_t k_used = rm.k.value_or(static_cast<std::int64_t>(cd.k_max));
        if (rm.zoom) {
            const SubgraphResult sub = k_core_subgraph(lg.graph, cd, k_used);
            const CoreDecomposition sub_cd = core_numbers(sub.graph);
            const auto boundary =
                static_cast<std::uint32_t>(core_node_set(sub_cd, sub_cd.k_max).size());
            write_output(rm.out, matrix_plot(sub.graph, degree_ordered_matrix_spec(
                                                            sub.graph, boundary, rm.cell_px)));
        } else {
            const auto boundary = static_cast<std::uint32_t>(core_node_set(cd, k_used).size());
            write_output(rm.out, matrix_plot(lg.graph, degree_ordered_matrix_spec(
                                                           lg.graph, boundary, rm.cell_px)));
        }
    });

    struct {
        std::string input;
        std::string out = "-";
        bool lcc = false;
    } rk;
    auto* c_rk = c_r->add_subcommand("knn", "Log-log nearest-neighbor degree plot");
    c_rk->add_option("--input", rk.input, "Edge-list file, or '-' for stdin")->required();
    c_rk->add_option("--out", rk.out, "Destination, or '-' for stdout")->capture_default_str();
    c_rk->add_flag("--lcc", rk.lcc, "Restrict to the largest connected component first");
    add_threads(c_rk);
    c_rk->callback([&] {
        apply_threads(threads);
        const LoadedGraph lg = load_graph(rk.input, rk.lcc);
        write_output(rk.out, knn_plot(knn_by_degree(lg.graph)));
    });

    struct {
        std::string input;
        std::string out = "-";
        std::uint32_t top_n = 14;
        std::optional<std::int64_t> k;
        double ref_x = 8.0;
        bool lcc = false;
    } rs;
    auto* c_rs = c_r->add_subcommand(
        "scatter", "Per-node degree vs super-peer links, core membership styled");
    c_rs->add_option("--input", rs.input, "Edge-list file, or '-' for stdin")->required();
    c_rs->add_option("--out", rs.out, "Destination, or '-' for stdout")->capture_default_str();
    c_rs->add_option("--top-n", rs.top_n,
                     "Super-peer count: the N highest-degree nodes (must not exceed node count)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_rs->add_option("--k", rs.k, "Core threshold for the marker styling; defaults to k_max")
        ->check(CLI::NonNegativeNumber);
    c_rs->add_option("--ref-x", rs.ref_x, "Dashed vertical reference line position")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    c_rs->add_flag("--lcc", rs.lcc, "Restrict to the largest connected component first");
    add_threads(c_rs);
    c_rs->callback([&] {
        apply_threads(threads);
        const LoadedGraph lg = load_graph(rs.input, rs.lcc);
        const CoreDecomposition cd = core_numbers(lg.graph);
        const std::int64_t k_used = rs.k.value_or(static_cast<std::int64_t>(cd.k_max));
        const std::vector<NodeId> core = core_node_set(cd, k_used);
        const SuperPeerReport rep = build_superpeer_report(lg.graph, rs.top_n, core);
        write_output(rs.out, scatter_ksn_plot(rep.profile, rs.ref_x));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
