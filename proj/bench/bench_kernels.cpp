// Times the parallel analysis kernels against their serial references on a
// generated topology, and checks the outputs agree bit for bit.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "corenet/degree_correlation.hpp"
#include "corenet/kcore.hpp"
#include "corenet/netgen.hpp"
#include "corenet/superpeer.hpp"

using namespace corenet;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(int reps, F&& f) {
    const auto t0 = clk::now();
    for (int i = 0; i < reps; ++i) f();
    const auto t1 = clk::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    SyntheticConfig cfg;
    cfg.nodes = argc > 1 ? static_cast<std::uint32_t>(std::strtoul(argv[1], nullptr, 10))
                         : 200000;
    cfg.supers = 14;
    cfg.out_degree = 8;
    cfg.seed = 42;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 5;

    const GeneratedNetwork net = generate(cfg);
    const Graph& g = net.graph;
    std::printf("graph: %u nodes, %llu edges, reps=%d\n", g.node_count(),
                static_cast<unsigned long long>(g.edge_count()), reps);
#ifdef _OPENMP
    std::printf("openmp: max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled (serial build)\n");
#endif

    const std::vector<NodeId>& supers = net.planted_supers;
    const CoreDecomposition cd = core_numbers(g);
    std::vector<NodeId> core;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (cd.core_number[v] >= cd.k_max) core.push_back(v);

    const double t_sums_s = time_ms(reps, [&] { neighbor_degree_sums_serial(g); });
    const double t_sums_p = time_ms(reps, [&] { neighbor_degree_sums(g); });
    const bool sums_ok = neighbor_degree_sums_serial(g) == neighbor_degree_sums(g);
    std::printf("neighbor_degree_sums   serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                t_sums_s, t_sums_p, t_sums_s / t_sums_p, sums_ok ? "match" : "MISMATCH");

    const double t_prof_s =
        time_ms(reps, [&] { superpeer_degree_profile_serial(g, supers, core); });
    const double t_prof_p = time_ms(reps, [&] { superpeer_degree_profile(g, supers, core); });
    const auto prof_a = superpeer_degree_profile_serial(g, supers, core);
    const auto prof_b = superpeer_degree_profile(g, supers, core);
    bool prof_ok = prof_a.size() == prof_b.size();
    for (std::size_t i = 0; prof_ok && i < prof_a.size(); ++i)
        prof_ok = prof_a[i].node == prof_b[i].node && prof_a[i].degree == prof_b[i].degree &&
                  prof_a[i].super_links == prof_b[i].super_links &&
                  prof_a[i].in_core == prof_b[i].in_core;
    std::printf("superpeer_profile      serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                t_prof_s, t_prof_p, t_prof_s / t_prof_p, prof_ok ? "match" : "MISMATCH");

    const double t_ast_s = time_ms(reps, [&] { assortativity_serial(g); });
    const double t_ast_p = time_ms(reps, [&] { assortativity(g); });
    const auto ast_a = assortativity_serial(g);
    const auto ast_b = assortativity(g);
    const bool ast_ok = ast_a.value == ast_b.value && ast_a.reason == ast_b.reason;
    std::printf("assortativity          serial %8.2f ms   parallel %8.2f ms   speedup %.2fx   %s\n",
                t_ast_s, t_ast_p, t_ast_s / t_ast_p, ast_ok ? "match" : "MISMATCH");

    const double t_core = time_ms(reps, [&] { core_numbers(g); });
    std::printf("core_numbers           serial %8.2f ms   (peeling is inherently sequential)\n",
                t_core);

    return (sums_ok && prof_ok && ast_ok) ? 0 : 1;
}
