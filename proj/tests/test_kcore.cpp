#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "corenet/kcore.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace corenet;

TEST_CASE("triangle: every node has core number 2") {
    const CoreDecomposition cd = core_numbers(testsup::triangle());
    CHECK(cd.core_number == std::vector<NodeId>{2, 2, 2});
    CHECK(cd.k_max == 2);
    REQUIRE(cd.shell_sizes.size() == 3);
    CHECK(cd.shell_sizes[2] == 3);
}

TEST_CASE("K4 plus pendant: clique peels at 3, pendant at 1") {
    const CoreDecomposition cd = core_numbers(testsup::k4_pendant());
    CHECK(cd.core_number == std::vector<NodeId>{3, 3, 3, 3, 1});
    CHECK(cd.k_max == 3);
}

TEST_CASE("isolated nodes get core number 0") {
    const Graph g = testsup::make_graph(3, {{0, 1}});
    const CoreDecomposition cd = core_numbers(g);
    CHECK(cd.core_number == std::vector<NodeId>{1, 1, 0});
    CHECK(cd.shell_sizes[0] == 1);
}

TEST_CASE("random graphs match the brute-force repeated-deletion oracle") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const NodeId n = 10 + static_cast<NodeId>(seed % 41);
        const double density = 0.05 + 0.45 * static_cast<double>(seed % 7) / 6.0;
        const Graph g = testsup::random_graph(n, density, seed * 7919);
        const CoreDecomposition cd = core_numbers(g);
        CHECK(cd.core_number == oracle::brute_core_numbers(g));
    }
}

TEST_CASE("decomposition invariants on random graphs") {
    for (std::uint64_t seed = 50; seed <= 56; ++seed) {
        const Graph g = testsup::random_graph(45, 0.12, seed);
        const CoreDecomposition cd = core_numbers(g);

        // core_number(v) <= degree(v); shell sizes partition the nodes.
        NodeId shell_total = 0;
        for (NodeId s : cd.shell_sizes) shell_total += s;
        CHECK(shell_total == g.node_count());
        for (NodeId v = 0; v < g.node_count(); ++v) CHECK(cd.core_number[v] <= g.degree(v));

        for (std::int64_t k = 0; k <= static_cast<std::int64_t>(cd.k_max) + 1; ++k) {
            const SubgraphResult sub = k_core_subgraph(g, cd, k);

            // Node set is exactly { v : core_number(v) >= k } (nesting follows).
            std::vector<NodeId> expect;
            for (NodeId v = 0; v < g.node_count(); ++v)
                if (cd.core_number[v] >= k) expect.push_back(v);
            CHECK(sub.kept == expect);

            // Internal degree >= k everywhere inside the k-core.
            for (NodeId v = 0; v < sub.graph.node_count(); ++v)
                CHECK(sub.graph.degree(v) >= static_cast<NodeId>(k));

            // Maximality: nobody outside has k neighbors inside.
            if (k > 0) {
                std::vector<bool> inside(g.node_count(), false);
                for (NodeId v : sub.kept) inside[v] = true;
                for (NodeId v = 0; v < g.node_count(); ++v) {
                    if (inside[v]) continue;
                    NodeId links = 0;
                    for (NodeId w : g.neighbors(v)) links += inside[w] ? 1 : 0;
                    CHECK(links < static_cast<NodeId>(k));
                }
            }
        }
    }
}

TEST_CASE("k_core_subgraph: whole graph at k=0, empty above k_max, negative k throws") {
    const Graph g = testsup::k4_pendant();
    CHECK(k_core_subgraph(g, 0).graph == g);
    CHECK(k_core_subgraph(g, 2).graph == testsup::complete(4));
    CHECK(k_core_subgraph(g, 4).graph.node_count() == 0);
    CHECK_THROWS_AS(k_core_subgraph(g, -1), std::invalid_argument);
}

TEST_CASE("core numbers are invariant under node relabeling") {
    for (std::uint64_t seed = 60; seed <= 63; ++seed) {
        const Graph g = testsup::random_graph(40, 0.15, seed);
        std::vector<NodeId> perm(g.node_count());
        std::iota(perm.begin(), perm.end(), 0);
        SplitMix64 rng(seed);
        for (std::size_t i = perm.size() - 1; i > 0; --i)
            std::swap(perm[i], perm[rng.next_below(i + 1)]);

        std::vector<std::pair<NodeId, NodeId>> edges;
        for (auto [u, v] : testsup::edge_list(g)) edges.emplace_back(perm[u], perm[v]);
        const Graph h = Graph::from_edges(g.node_count(), std::move(edges));

        const CoreDecomposition cg = core_numbers(g);
        const CoreDecomposition ch = core_numbers(h);
        CHECK(cg.k_max == ch.k_max);
        CHECK(cg.shell_sizes == ch.shell_sizes);
        for (NodeId v = 0; v < g.node_count(); ++v)
            CHECK(cg.core_number[v] == ch.core_number[perm[v]]);
    }
}

TEST_CASE("core_periphery_split: defaults to k_max and partitions the nodes") {
    const CorePeripherySplit tri = core_periphery_split(testsup::triangle());
    CHECK(tri.k_used == 2);
    CHECK(tri.core == std::vector<NodeId>{0, 1, 2});
    CHECK(tri.periphery.empty());

    const CorePeripherySplit st = core_periphery_split(testsup::star(5));
    CHECK(st.k_used == 1);  // k_max of a star is 1
    CHECK(st.core.size() == 6);

    const CorePeripherySplit kp = core_periphery_split(testsup::k4_pendant());
    CHECK(kp.core == std::vector<NodeId>{0, 1, 2, 3});
    CHECK(kp.periphery == std::vector<NodeId>{4});

    const CorePeripherySplit kp1 = core_periphery_split(testsup::k4_pendant(), 1);
    CHECK(kp1.core.size() == 5);
    CHECK_THROWS_AS(core_periphery_split(testsup::triangle(), -2), std::invalid_argument);
}
