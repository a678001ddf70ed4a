#include "reprank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace reprank {

namespace {

// Splits on runs of spaces/tabs; returns false unless exactly two tokens.
bool split_two(std::string_view line, std::string_view& a, std::string_view& b)
{
    constexpr std::string_view ws = " \t";
    const std::size_t a0 = line.find_first_not_of(ws);
    if (a0 == std::string_view::npos) return false;
    const std::size_t a1 = line.find_first_of(ws, a0);
    if (a1 == std::string_view::npos) return false;
    const std::size_t b0 = line.find_first_not_of(ws, a1);
    if (b0 == std::string_view::npos) return false;
    const std::size_t b1 = line.find_first_of(ws, b0);
    if (b1 != std::string_view::npos && line.find_first_not_of(ws, b1) != std::string_view::npos)
        return false;  // third token
    a = line.substr(a0, a1 - a0);
    b = line.substr(b0, (b1 == std::string_view::npos ? line.size() : b1) - b0);
    return true;
}

}  // namespace

Graph Graph::load_edge_list(std::istream& in, EdgeListStats* stats)
{
    Graph g;
    std::vector<Edge> edges;
    std::string line;
    std::uint64_t line_no = 0;

    auto intern = [&g](std::string_view id) -> NodeId {
        auto it = g.index_.find(std::string(id));
        if (it != g.index_.end()) return it->second;
        const NodeId v = static_cast<NodeId>(g.ids_.size());
        g.ids_.emplace_back(id);
        g.index_.emplace(g.ids_.back(), v);
        return v;
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::string_view src, dst;
        if (!split_two(line, src, dst))
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected exactly two node ids");
        const NodeId s = intern(src);  // sequenced: ids follow reading order
        const NodeId t = intern(dst);
        edges.emplace_back(s, t);
    }
    if (in.bad()) throw std::runtime_error("edge list: read failure");

    g.node_count_ = static_cast<NodeId>(g.ids_.size());
    g.finalize(std::move(edges), stats);
    return g;
}

Graph Graph::load_edge_list_file(const std::string& path, EdgeListStats* stats)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return load_edge_list(in, stats);
}

Graph Graph::from_edges(NodeId node_count, std::vector<Edge> edges, EdgeListStats* stats)
{
    Graph g;
    g.node_count_ = node_count;
    g.ids_.reserve(node_count);
    for (NodeId v = 0; v < node_count; ++v) {
        g.ids_.push_back(std::to_string(v));
        g.index_.emplace(g.ids_.back(), v);
    }
    for (const Edge& e : edges)
        if (e.first >= node_count || e.second >= node_count)
            throw std::invalid_argument("from_edges: endpoint out of range");
    g.finalize(std::move(edges), stats);
    return g;
}

void Graph::finalize(std::vector<Edge>&& edges, EdgeListStats* stats)
{
    EdgeListStats local;

    // Self-loops first, then exact duplicates.
    const auto kept = std::remove_if(edges.begin(), edges.end(),
                                     [](const Edge& e) { return e.first == e.second; });
    local.self_loops = static_cast<std::uint64_t>(edges.end() - kept);
    edges.erase(kept, edges.end());

    std::sort(edges.begin(), edges.end());
    const auto uniq = std::unique(edges.begin(), edges.end());
    local.duplicate_edges = static_cast<std::uint64_t>(edges.end() - uniq);
    edges.erase(uniq, edges.end());

    const NodeId n = node_count_;
    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    out_targets_.resize(edges.size());
    in_sources_.resize(edges.size());

    for (const Edge& e : edges) {
        ++out_offsets_[e.first + 1];
        ++in_offsets_[e.second + 1];
    }
    for (NodeId v = 0; v < n; ++v) {
        out_offsets_[v + 1] += out_offsets_[v];
        in_offsets_[v + 1] += in_offsets_[v];
    }

    // Edges are sorted by (src, dst), so targets land sorted per source.
    std::vector<std::uint64_t> cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    std::uint64_t pos = 0;
    for (const Edge& e : edges) {
        out_targets_[pos++] = e.second;
        in_sources_[cursor[e.second]++] = e.first;
    }

    if (stats) *stats = local;
}

std::span<const NodeId> Graph::out_neighbors(NodeId v) const
{
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
}

std::span<const NodeId> Graph::in_neighbors(NodeId v) const
{
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
}

std::uint32_t Graph::out_degree(NodeId v) const
{
    return static_cast<std::uint32_t>(out_offsets_[v + 1] - out_offsets_[v]);
}

std::uint32_t Graph::in_degree(NodeId v) const
{
    return static_cast<std::uint32_t>(in_offsets_[v + 1] - in_offsets_[v]);
}

bool Graph::has_edge(NodeId src, NodeId dst) const
{
    const auto nbrs = out_neighbors(src);
    return std::binary_search(nbrs.begin(), nbrs.end(), dst);
}

const std::string& Graph::external_id(NodeId v) const
{
    return ids_.at(v);
}

std::optional<NodeId> Graph::find_node(std::string_view external_id) const
{
    auto it = index_.find(std::string(external_id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

void Graph::write_edges(std::ostream& out) const
{
    for (NodeId v = 0; v < node_count_; ++v)
        for (NodeId w : out_neighbors(v))
            out << ids_[v] << '\t' << ids_[w] << '\n';
}

void Graph::write_id_map(std::ostream& out) const
{
    for (NodeId v = 0; v < node_count_; ++v)
        out << ids_[v] << '\t' << v << '\n';
}

namespace {

// Shared selection-to-subgraph step: keep edges with both endpoints selected,
// then flag selected nodes that touch none of them.
SubgraphSelection induce(const Graph& g, std::vector<NodeId> selected)
{
    SubgraphSelection sel;
    std::vector<char> in_set(g.node_count(), 0);
    for (NodeId v : selected) in_set[v] = 1;

    std::vector<char> connected(g.node_count(), 0);
    std::vector<NodeId> sorted = selected;
    std::sort(sorted.begin(), sorted.end());
    for (NodeId v : sorted) {
        for (NodeId w : g.out_neighbors(v)) {
            if (!in_set[w]) continue;
            sel.edges.emplace_back(v, w);
            connected[v] = connected[w] = 1;
        }
    }
    for (NodeId v : sorted)
        if (!connected[v]) sel.omitted.push_back(v);

    sel.nodes = std::move(selected);
    return sel;
}

template <typename Better>
SubgraphSelection select_top_k(const Graph& g, NodeId k, Better better)
{
    if (k > g.node_count())
        throw std::invalid_argument("top_k: k exceeds node count");
    std::vector<NodeId> order(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), better);
    order.resize(k);
    return induce(g, std::move(order));
}

}  // namespace

SubgraphSelection top_k_by_indegree(const Graph& g, NodeId k)
{
    return select_top_k(g, k, [&g](NodeId a, NodeId b) {
        const auto da = g.in_degree(a), db = g.in_degree(b);
        return da != db ? da > db : a < b;
    });
}

SubgraphSelection top_k_by_score(const Graph& g, std::span<const double> scores, NodeId k)
{
    if (scores.size() != g.node_count())
        throw std::invalid_argument("top_k_by_score: score vector length mismatch");
    return select_top_k(g, k, [scores](NodeId a, NodeId b) {
        return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
    });
}

}  // namespace reprank
