#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corenet/degree_correlation.hpp"
#include "corenet/graph.hpp"
#include "corenet/kcore.hpp"
#include "corenet/superpeer.hpp"

namespace corenet {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "corenet-report/1";

// Numbers in emitted documents are fixed at 9 significant digits so repeated
// runs are byte-identical across platforms.
std::string format_sig9(double value);
double round_sig9(double value);

struct MatrixPlotSpec {
    std::vector<NodeId> position;        // per-node plot position, a permutation
    std::uint32_t boundary_index = 0;    // core size; dotted lines drawn here
    std::uint32_t cell_px = 4;
    std::uint32_t max_renderable_n = 1000;
};

// Positions by descending degree, ties by ascending id, so hubs occupy the
// top-left corner of the matrix.
MatrixPlotSpec degree_ordered_matrix_spec(const Graph& g, std::uint32_t boundary_index,
                                          std::uint32_t cell_px = 4);

// Adjacency-matrix plot: one filled cell per ordered adjacency entry, so the
// filled-cell count is exactly 2|E|.
std::string matrix_plot(const Graph& g, const MatrixPlotSpec& spec);

// Log-log scatter of (k, knn_k) with the assortativity value annotated.
std::string knn_plot(const DegreeCorrelationTable& table);

// Log-x scatter of (k_i, super_links); degree-0 nodes are skipped. Core and
// periphery markers carry distinct classes; a dashed vertical reference line
// sits at reference_x.
std::string scatter_ksn_plot(std::span<const ProfileEntry> profile, double reference_x = 8.0);

struct ReportParams {
    std::uint32_t top_n = 14;
    std::optional<std::int64_t> k;   // core threshold; empty means k_max
    bool lcc_requested = false;
    bool lcc_applied = false;
    std::string input_digest;        // e.g. "fnv1a64:0123456789abcdef"
};

// Full machine-readable report: graph stats, core decomposition summary,
// degree-correlation table, super-peer report, robustness under removal of
// the top_n super-peers, plus provenance. Fixed key order, byte-stable.
std::string analysis_report(const Graph& g, const ReportParams& params);

// Subcommand documents.
std::string kcore_json(const Graph& g, const CoreDecomposition& cd, std::int64_t k_used,
                       bool include_members);
std::string assortativity_json(const AssortativityResult& r);
std::string superpeer_json(const Graph& g, const SuperPeerReport& rep);
std::string robustness_json(const Graph& g, const RobustnessReport& rep);

// CSV exports.
std::string knn_table_csv(const DegreeCorrelationTable& table);
std::string profile_csv(const Graph& g, std::span<const ProfileEntry> profile);

std::string digest_string(std::span<const char> bytes);

}  // namespace corenet
