#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corenet {

using NodeId = std::uint32_t;

// Error for malformed edge-list input. line() is 1-based; 0 means the input
// as a whole (e.g. no edges at all).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParseStats {
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
};

// Simple undirected graph over dense node ids 0..n-1, CSR adjacency with
// sorted neighbor lists. No self-loops, no parallel edges, symmetric.
// Immutable after construction; all queries are const and thread-safe.
class Graph {
public:
    Graph() = default;

    // Builds from an endpoint-pair list. Self-loops are dropped and duplicate
    // edges merged; counts of both land in *stats when given. labels must be
    // empty or exactly node_count entries.
    static Graph from_edges(NodeId node_count,
                            std::vector<std::pair<NodeId, NodeId>> edges,
                            std::vector<std::string> labels = {},
                            ParseStats* stats = nullptr);

    NodeId node_count() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    std::uint64_t edge_count() const { return adj_.size() / 2; }

    NodeId degree(NodeId v) const {
        check_node(v);
        return static_cast<NodeId>(offsets_[v + 1] - offsets_[v]);
    }

    std::span<const NodeId> neighbors(NodeId v) const {
        check_node(v);
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    NodeId max_degree() const { return max_degree_; }

    bool has_labels() const { return !labels_.empty(); }
    std::span<const std::string> labels() const { return labels_; }

    // External label of v; decimal id when the graph is unlabeled.
    std::string label_or_id(NodeId v) const {
        check_node(v);
        return labels_.empty() ? std::to_string(v) : labels_[v];
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    void check_node(NodeId v) const {
        if (v >= node_count())
            throw std::out_of_range("node id " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(node_count()) + ")");
    }

    std::vector<std::uint64_t> offsets_;  // size n+1
    std::vector<NodeId> adj_;             // size 2m, sorted per node
    std::vector<std::string> labels_;     // empty when unlabeled
    NodeId max_degree_ = 0;
};

struct ParsedGraph {
    Graph graph;
    ParseStats stats;
};

// Parses a line-oriented edge list: two whitespace-separated node labels per
// line, '#' lines are comments, blank lines allowed. Labels map to dense ids
// in first-appearance order. Input direction is ignored.
ParsedGraph parse_edge_list(std::string_view text);

// Canonical edge-list form: "# nodes=N edges=M" header, then one
// "label_u label_v" line per edge with label_u <= label_v lexicographically,
// lines sorted. Isolated nodes carry no edges and thus do not round-trip.
std::string serialize_edge_list(const Graph& g);

struct ComponentPartition {
    std::vector<NodeId> component_id;       // per node
    std::vector<NodeId> component_sizes;    // non-increasing
};

// Components numbered by descending size, ties by smallest member id.
ComponentPartition connected_components(const Graph& g);

struct SubgraphResult {
    Graph graph;
    std::vector<NodeId> kept;               // new id -> old id, ascending old id
    std::vector<std::int32_t> old_to_new;   // -1 for dropped nodes
};

// Induced subgraph over `keep` (duplicates tolerated), nodes reindexed in
// ascending old-id order. Labels carry over when present.
SubgraphResult induced_subgraph(const Graph& g, std::span<const NodeId> keep);

// Equals induced_subgraph over the complement of `drop`.
SubgraphResult remove_nodes(const Graph& g, std::span<const NodeId> drop);

// Induced subgraph over the largest connected component.
SubgraphResult largest_component_subgraph(const Graph& g);

}  // namespace corenet
