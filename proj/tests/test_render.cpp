#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "corenet/degree_correlation.hpp"
#include "corenet/kcore.hpp"
#include "corenet/netgen.hpp"
#include "corenet/render.hpp"
#include "corenet/superpeer.hpp"
#include "test_support.hpp"
#include "xml_check.hpp"

using namespace corenet;
using xmlcheck::check_xml;

namespace {

GeneratedNetwork small_net() {
    SyntheticConfig c;
    c.nodes = 400;
    c.supers = 6;
    c.out_degree = 5;
    c.bias = 0.5;
    c.seed = 21;
    return generate(c);
}

}  // namespace

TEST_CASE("number formatting: 9 significant digits, round-trip stable") {
    CHECK(format_sig9(1.0) == "1");
    CHECK(format_sig9(0.5) == "0.5");
    CHECK(format_sig9(1.0 / 3.0) == "0.333333333");
    CHECK(format_sig9(-0.28) == "-0.28");
    CHECK(round_sig9(round_sig9(1.0 / 3.0)) == round_sig9(1.0 / 3.0));
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.next_double() * 2000.0 - 1000.0;
        const double once = round_sig9(x);
        CHECK(round_sig9(once) == once);
    }
}

TEST_CASE("digest: fnv1a64 prefix and hex width") {
    CHECK(digest_string(std::span<const char>{}) == "fnv1a64:cbf29ce484222325");
    const std::string s = "0 1\n";
    CHECK(digest_string({s.data(), s.size()}).size() == 8 + 16);
}

TEST_CASE("matrix: triangle renders 6 filled cells inside a 3x3 grid") {
    const Graph tri = testsup::triangle();
    const std::string svg = matrix_plot(tri, degree_ordered_matrix_spec(tri, 3));
    const auto chk = check_xml(svg);
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.at("cell") == 6);
    CHECK(chk.class_count.at("boundary") == 2);  // one horizontal, one vertical
    CHECK(chk.tag_count.at("svg") == 1);
    CHECK(svg.find("width=") != std::string::npos);
    CHECK(svg.find("height=") != std::string::npos);
}

TEST_CASE("matrix: empty two-node graph has no filled cells") {
    const Graph g = Graph::from_edges(2, {});
    const std::string svg = matrix_plot(g, degree_ordered_matrix_spec(g, 0));
    const auto chk = check_xml(svg);
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.count("cell") == 0);
}

TEST_CASE("matrix: filled cells equal twice the edge count on a generated core") {
    const GeneratedNetwork net = small_net();
    const SubgraphResult sub = k_core_subgraph(net.graph, core_numbers(net.graph).k_max);
    REQUIRE(sub.graph.node_count() > 0);
    const std::string svg =
        matrix_plot(sub.graph, degree_ordered_matrix_spec(sub.graph, sub.graph.node_count()));
    const auto chk = check_xml(svg);
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.at("cell") == static_cast<int>(2 * sub.graph.edge_count()));
}

TEST_CASE("matrix: oversize graphs are rejected with a remediation hint") {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i + 1 < 1100; ++i) edges.emplace_back(i, i + 1);
    const Graph big = Graph::from_edges(1100, std::move(edges));
    try {
        matrix_plot(big, degree_ordered_matrix_spec(big, 0));
        FAIL("expected std::length_error");
    } catch (const std::length_error& e) {
        CHECK(std::string(e.what()).find("k_core_subgraph") != std::string::npos);
    }
}

TEST_CASE("matrix: spec validation") {
    const Graph tri = testsup::triangle();
    MatrixPlotSpec spec = degree_ordered_matrix_spec(tri, 1);

    MatrixPlotSpec short_pos = spec;
    short_pos.position.pop_back();
    CHECK_THROWS_AS(matrix_plot(tri, short_pos), std::invalid_argument);

    MatrixPlotSpec not_perm = spec;
    not_perm.position = {0, 0, 1};
    CHECK_THROWS_AS(matrix_plot(tri, not_perm), std::invalid_argument);

    MatrixPlotSpec bad_boundary = spec;
    bad_boundary.boundary_index = 4;
    CHECK_THROWS_AS(matrix_plot(tri, bad_boundary), std::invalid_argument);

    MatrixPlotSpec zero_cell = spec;
    zero_cell.cell_px = 0;
    CHECK_THROWS_AS(matrix_plot(tri, zero_cell), std::invalid_argument);
}

TEST_CASE("matrix ordering: descending degree, ties by id") {
    // star(3): hub degree 3 first, then leaves by id.
    const MatrixPlotSpec spec = degree_ordered_matrix_spec(testsup::star(3), 1);
    CHECK(spec.position == std::vector<NodeId>{0, 1, 2, 3});
    // path(3): degrees 1,2,1 -> node 1 first, then 0, then 2.
    const MatrixPlotSpec p = degree_ordered_matrix_spec(testsup::path(3), 1);
    CHECK(p.position == std::vector<NodeId>{1, 0, 2});
}

TEST_CASE("knn plot: one marker per table row, assortativity annotated") {
    const DegreeCorrelationTable one = knn_by_degree(testsup::complete(4));
    const std::string svg = knn_plot(one);
    const auto chk = check_xml(svg);
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.at("pt") == 1);
    CHECK(svg.find("assortativity undefined") != std::string::npos);

    const DegreeCorrelationTable two = knn_by_degree(testsup::path(4));
    const std::string svg2 = knn_plot(two);
    CHECK(check_xml(svg2).class_count.at("pt") == 2);
    CHECK(svg2.find("assortativity = ") != std::string::npos);

    CHECK_THROWS_AS(knn_plot(DegreeCorrelationTable{}), std::invalid_argument);
}

TEST_CASE("knn plot: generated graph marker count equals row count") {
    const GeneratedNetwork net = small_net();
    const DegreeCorrelationTable table = knn_by_degree(net.graph);
    const auto chk = check_xml(knn_plot(table));
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.at("pt") == static_cast<int>(table.rows.size()));
}

TEST_CASE("scatter: single periphery node at the reference line") {
    const std::vector<ProfileEntry> profile{{0, 8, 1, false}};
    const std::string svg = scatter_ksn_plot(profile);
    const auto chk = check_xml(svg);
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.at("peri") == 1);
    CHECK(chk.class_count.count("core") == 0);
    CHECK(chk.class_count.at("refline") == 1);

    CHECK_THROWS_AS(scatter_ksn_plot({}), std::invalid_argument);
}

TEST_CASE("scatter: all-core profiles carry only the core class") {
    const std::vector<ProfileEntry> profile{{0, 3, 1, true}, {1, 5, 2, true}};
    const auto chk = check_xml(scatter_ksn_plot(profile));
    REQUIRE_MESSAGE(chk.ok, chk.error);
    CHECK(chk.class_count.at("core") == 2);
    CHECK(chk.class_count.count("peri") == 0);
}

TEST_CASE("scatter: marker count equals nodes with degree >= 1") {
    const GeneratedNetwork net = small_net();
    const CoreDecomposition cd = core_numbers(net.graph);
    std::vector<NodeId> core;
    for (NodeId v = 0; v < net.graph.node_count(); ++v)
        if (cd.core_number[v] >= cd.k_max) core.push_back(v);
    const auto profile = superpeer_degree_profile(net.graph, net.planted_supers, core);
    const auto chk = check_xml(scatter_ksn_plot(profile));
    REQUIRE_MESSAGE(chk.ok, chk.error);
    int expected = 0;
    for (const auto& e : profile) expected += e.degree >= 1 ? 1 : 0;
    const int cores = chk.class_count.count("core") ? chk.class_count.at("core") : 0;
    const int peris = chk.class_count.count("peri") ? chk.class_count.at("peri") : 0;
    CHECK(cores + peris == expected);
}

TEST_CASE("emitters are byte-stable across repeated calls") {
    const GeneratedNetwork net = small_net();
    const SubgraphResult sub = k_core_subgraph(net.graph, core_numbers(net.graph).k_max);
    const MatrixPlotSpec spec =
        degree_ordered_matrix_spec(sub.graph, sub.graph.node_count());
    CHECK(matrix_plot(sub.graph, spec) == matrix_plot(sub.graph, spec));

    const DegreeCorrelationTable table = knn_by_degree(net.graph);
    CHECK(knn_plot(table) == knn_plot(table));
}

TEST_CASE("analysis report: fixed key order, self-consistent fields") {
    const GeneratedNetwork net = small_net();
    ReportParams params;
    params.top_n = 6;
    params.input_digest = "fnv1a64:0000000000000000";
    const std::string doc = analysis_report(net.graph, params);
    CHECK(analysis_report(net.graph, params) == doc);  // byte-stable

    const nlohmann::json j = nlohmann::json::parse(doc);
    CHECK(j.at("schema") == kReportSchema);
    CHECK(j.at("provenance").at("tool_version") == kToolVersion);
    CHECK(j.at("provenance").at("parameters").at("top_n") == 6);
    CHECK(j.at("provenance").at("parameters").at("k").is_null());
    CHECK(j.at("provenance").at("lcc_applied") == false);

    CHECK(j.at("graph").at("nodes") == net.graph.node_count());
    CHECK(j.at("graph").at("edges") == net.graph.edge_count());

    const CoreDecomposition cd = core_numbers(net.graph);
    CHECK(j.at("kcore").at("k_max") == cd.k_max);
    CHECK(j.at("kcore").at("k_used") == cd.k_max);
    CHECK(j.at("kcore").at("core_size") == cd.shell_sizes[cd.k_max]);

    const DegreeCorrelationTable table = knn_by_degree(net.graph);
    REQUIRE(table.assortativity.value.has_value());
    CHECK(j.at("degree_correlation").at("assortativity").get<double>() ==
          round_sig9(*table.assortativity.value));
    CHECK(j.at("degree_correlation").at("knn").size() == table.rows.size());

    std::vector<NodeId> core;
    for (NodeId v = 0; v < net.graph.node_count(); ++v)
        if (cd.core_number[v] >= cd.k_max) core.push_back(v);
    const SuperPeerReport sp = build_superpeer_report(net.graph, 6, core);
    CHECK(j.at("superpeers").at("supers").size() == 6);
    CHECK(j.at("superpeers").at("coverage").at("covered_nodes") == sp.coverage.covered_nodes);
    CHECK(j.at("superpeers").at("profile").size() == net.graph.node_count());

    const RobustnessReport rb = removal_robustness(net.graph, sp.supers);
    CHECK(j.at("robustness").at("after").at("nodes") == rb.after.nodes);
    CHECK(j.at("robustness").at("after").at("largest_component") == rb.after.largest_component);

    // Insertion order is the contract, not alphabetical order.
    CHECK(doc.find("\"schema\"") < doc.find("\"provenance\""));
    CHECK(doc.find("\"provenance\"") < doc.find("\"graph\""));
    CHECK(doc.find("\"graph\"") < doc.find("\"kcore\""));
    CHECK(doc.find("\"kcore\"") < doc.find("\"degree_correlation\""));
    CHECK(doc.find("\"degree_correlation\"") < doc.find("\"superpeers\""));
    CHECK(doc.find("\"superpeers\"") < doc.find("\"robustness\""));
}

TEST_CASE("subcommand documents: null handling and member lists") {
    const std::string undef = assortativity_json(assortativity(testsup::triangle()));
    const nlohmann::json ju = nlohmann::json::parse(undef);
    CHECK(ju.at("assortativity").is_null());
    CHECK(ju.at("reason") == "zero degree variance across edge endpoints");

    const std::string def = assortativity_json(assortativity(testsup::star(3)));
    const nlohmann::json jd = nlohmann::json::parse(def);
    CHECK(jd.at("assortativity").get<double>() == -1.0);
    CHECK(jd.count("reason") == 0);

    const Graph g = testsup::k4_pendant();
    const CoreDecomposition cd = core_numbers(g);
    const nlohmann::json plain = nlohmann::json::parse(kcore_json(g, cd, cd.k_max, false));
    CHECK(plain.at("k_max") == 3);
    CHECK(plain.at("shell_sizes").at("3") == 4);
    CHECK(plain.at("core_numbers").size() == 5);
    CHECK(plain.count("core_members") == 0);

    const nlohmann::json with = nlohmann::json::parse(kcore_json(g, cd, 3, true));
    REQUIRE(with.count("core_members") == 1);
    CHECK(with.at("core_members").size() == 4);
    CHECK(with.at("k_used") == 3);
}

TEST_CASE("CSV exports") {
    const DegreeCorrelationTable t = knn_by_degree(testsup::star(3));
    CHECK(knn_table_csv(t) == "k,n_k,knn_k\n1,3,3\n3,1,1\n");

    const Graph g = testsup::path(3);
    const std::vector<NodeId> supers{1};
    const std::vector<NodeId> core{0, 1, 2};
    const auto profile = superpeer_degree_profile(g, supers, core);
    CHECK(profile_csv(g, profile) ==
          "node,k,ksn,in_core\n0,1,1,1\n1,2,0,1\n2,1,1,1\n");
}
