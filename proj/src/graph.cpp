#include "corenet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace corenet {

Graph Graph::from_edges(NodeId node_count, std::vector<std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels, ParseStats* stats) {
    if (!labels.empty() && labels.size() != node_count)
        throw std::invalid_argument("labels must be empty or have one entry per node");

    ParseStats local;
    std::vector<std::pair<NodeId, NodeId>> clean;
    clean.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) {
            ++local.self_loops;
            continue;
        }
        clean.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(clean.begin(), clean.end());
    auto last = std::unique(clean.begin(), clean.end());
    local.duplicate_edges = static_cast<std::uint64_t>(clean.end() - last);
    clean.erase(last, clean.end());

    Graph g;
    g.labels_ = std::move(labels);
    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (auto [u, v] : clean) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.adj_.resize(clean.size() * 2);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : clean) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // clean is sorted by (u,v), so each node's list comes out sorted already
    // for the u side; the v side needs a per-node sort.
    for (NodeId v = 0; v < node_count; ++v)
        std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                  g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));

    for (NodeId v = 0; v < node_count; ++v)
        g.max_degree_ = std::max(g.max_degree_, g.degree(v));

    if (stats) *stats = local;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    check_node(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> pairs;

    auto intern = [&](std::string_view tok) {
        auto it = ids.find(std::string(tok));
        if (it != ids.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        labels.emplace_back(tok);
        ids.emplace(labels.back(), id);
        return id;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool saw_edge_line = false;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;

        std::size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i == line.size()) continue;       // blank
        if (line[i] == '#') continue;         // comment

        std::vector<std::string_view> toks;
        while (i < line.size()) {
            std::size_t start = i;
            while (i < line.size() && !is_space(line[i])) ++i;
            toks.push_back(line.substr(start, i - start));
            while (i < line.size() && is_space(line[i])) ++i;
        }
        if (toks.size() != 2)
            throw ParseError(line_no, "expected 2 tokens, got " + std::to_string(toks.size()));
        saw_edge_line = true;
        NodeId u = intern(toks[0]);
        NodeId v = intern(toks[1]);
        pairs.emplace_back(u, v);
    }

    if (!saw_edge_line) throw ParseError(0, "empty input: no edges");

    ParsedGraph out;
    const NodeId node_count = static_cast<NodeId>(labels.size());
    out.graph = Graph::from_edges(node_count, std::move(pairs), std::move(labels), &out.stats);
    return out;
}

std::string serialize_edge_list(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.edge_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v < u) continue;  // emit each edge once
            std::string lu = g.label_or_id(u);
            std::string lv = g.label_or_id(v);
            if (lv < lu) std::swap(lu, lv);
            lines.push_back(lu + " " + lv);
        }
    }
    std::sort(lines.begin(), lines.end());

    std::string out = "# nodes=" + std::to_string(g.node_count()) +
                      " edges=" + std::to_string(g.edge_count()) + "\n";
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

ComponentPartition connected_components(const Graph& g) {
    const NodeId n = g.node_count();
    constexpr NodeId kUnvisited = static_cast<NodeId>(-1);
    std::vector<NodeId> comp(n, kUnvisited);
    struct Comp {
        NodeId seed;
        NodeId size;
    };
    std::vector<Comp> comps;

    std::vector<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != kUnvisited) continue;
        NodeId cid = static_cast<NodeId>(comps.size());
        NodeId size = 0;
        queue.clear();
        queue.push_back(s);
        comp[s] = cid;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            NodeId v = queue[head];
            ++size;
            for (NodeId w : g.neighbors(v)) {
                if (comp[w] == kUnvisited) {
                    comp[w] = cid;
                    queue.push_back(w);
                }
            }
        }
        comps.push_back({s, size});
    }

    // Reindex by descending size, ties by smallest member id (== BFS seed).
    std::vector<NodeId> order(comps.size());
    for (NodeId i = 0; i < comps.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (comps[a].size != comps[b].size) return comps[a].size > comps[b].size;
        return comps[a].seed < comps[b].seed;
    });
    std::vector<NodeId> remap(comps.size());
    for (NodeId rank = 0; rank < order.size(); ++rank) remap[order[rank]] = rank;

    ComponentPartition part;
    part.component_id.resize(n);
    for (NodeId v = 0; v < n; ++v) part.component_id[v] = remap[comp[v]];
    part.component_sizes.resize(comps.size());
    for (NodeId rank = 0; rank < order.size(); ++rank)
        part.component_sizes[rank] = comps[order[rank]].size;
    return part;
}

SubgraphResult induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
    const NodeId n = g.node_count();
    std::vector<bool> in_keep(n, false);
    for (NodeId v : keep) {
        if (v >= n)
            throw std::out_of_range("keep id " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n) + ")");
        in_keep[v] = true;
    }

    SubgraphResult res;
    res.old_to_new.assign(n, -1);
    for (NodeId v = 0; v < n; ++v) {
        if (in_keep[v]) {
            res.old_to_new[v] = static_cast<std::int32_t>(res.kept.size());
            res.kept.push_back(v);
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId v : res.kept) {
        for (NodeId w : g.neighbors(v)) {
            if (w > v && in_keep[w])
                edges.emplace_back(static_cast<NodeId>(res.old_to_new[v]),
                                   static_cast<NodeId>(res.old_to_new[w]));
        }
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(res.kept.size());
        for (NodeId v : res.kept) labels.push_back(g.labels()[v]);
    }
    res.graph = Graph::from_edges(static_cast<NodeId>(res.kept.size()), std::move(edges),
                                  std::move(labels));
    return res;
}

SubgraphResult remove_nodes(const Graph& g, std::span<const NodeId> drop) {
    const NodeId n = g.node_count();
    std::vector<bool> dropped(n, false);
    for (NodeId v : drop) {
        if (v >= n)
            throw std::out_of_range("drop id " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(n) + ")");
        dropped[v] = true;
    }
    std::vector<NodeId> keep;
    keep.reserve(n);
    for (NodeId v = 0; v < n; ++v)
        if (!dropped[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

SubgraphResult largest_component_subgraph(const Graph& g) {
    ComponentPartition part = connected_components(g);
    std::vector<NodeId> keep;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (part.component_id[v] == 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

}  // namespace corenet
