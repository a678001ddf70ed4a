#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace reprank {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;  // (src, dst), internal ids

// Counts of edges removed while ingesting an edge list.
struct EdgeListStats {
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
};

/// Immutable directed graph in compressed sparse form.
///
/// External node identifiers (arbitrary strings) are mapped to dense internal
/// ids 0..n-1 in first-seen order. Duplicate edges and self-loops are dropped
/// during construction, so the adjacency is simple. Both out- and in-neighbor
/// lists are materialized and kept sorted. Instances never change after
/// construction and are safe to share across concurrent readers.
class Graph {
public:
    Graph() = default;

    /// Parses one "src dst" edge per line, separated by a tab or spaces.
    /// Blank lines and lines starting with '#' are ignored. A line that does
    /// not hold exactly two tokens raises std::runtime_error naming the line
    /// number. Empty input yields a valid empty graph.
    static Graph load_edge_list(std::istream& in, EdgeListStats* stats = nullptr);
    static Graph load_edge_list_file(const std::string& path, EdgeListStats* stats = nullptr);

    /// Builds a graph over internal ids 0..node_count-1 directly; external ids
    /// default to the decimal form of the index. Applies the same cleanup
    /// rules as the text loader.
    static Graph from_edges(NodeId node_count, std::vector<Edge> edges,
                            EdgeListStats* stats = nullptr);

    NodeId node_count() const { return node_count_; }
    std::uint64_t edge_count() const { return out_targets_.size(); }

    std::span<const NodeId> out_neighbors(NodeId v) const;
    std::span<const NodeId> in_neighbors(NodeId v) const;
    std::uint32_t out_degree(NodeId v) const;
    std::uint32_t in_degree(NodeId v) const;
    bool has_edge(NodeId src, NodeId dst) const;

    const std::string& external_id(NodeId v) const;
    std::optional<NodeId> find_node(std::string_view external_id) const;

    /// Emits "src<TAB>dst" rows; reloading them reproduces this graph.
    void write_edges(std::ostream& out) const;

    /// Emits "external_id<TAB>internal_index", one row per node.
    void write_id_map(std::ostream& out) const;

private:
    void finalize(std::vector<Edge>&& edges, EdgeListStats* stats);

    NodeId node_count_ = 0;
    std::vector<std::uint64_t> out_offsets_;  // CSR over sources
    std::vector<NodeId> out_targets_;
    std::vector<std::uint64_t> in_offsets_;   // CSC over destinations
    std::vector<NodeId> in_sources_;
    std::vector<std::string> ids_;            // internal -> external
    std::unordered_map<std::string, NodeId> index_;
};

/// Induced subgraph produced by the top-k selections. `omitted` lists the
/// selected nodes that have no edge to another selected node.
struct SubgraphSelection {
    std::vector<NodeId> nodes;    // in selection (rank) order
    std::vector<Edge> edges;      // both endpoints selected, sorted
    std::vector<NodeId> omitted;  // isolated within the selection
};

/// The k nodes of highest in-degree, ties broken by internal id ascending.
/// Throws std::invalid_argument if k exceeds the node count.
SubgraphSelection top_k_by_indegree(const Graph& g, NodeId k);

/// The k nodes of highest score, same tie rule. scores.size() must equal the
/// node count.
SubgraphSelection top_k_by_score(const Graph& g, std::span<const double> scores, NodeId k);

}  // namespace reprank
