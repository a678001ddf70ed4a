#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "reprank/graph.hpp"

namespace reprank {

struct ScoreRow {
    std::string id;  // external node id
    double score = 0.0;
};

/// Writes "node_id<TAB>score" for every node, sorted by score descending with
/// ties broken by internal id ascending (first-seen order). Header comments,
/// if any, are emitted first as '#'-prefixed lines. Numbers use the shortest
/// round-trip form.
void write_scores(std::ostream& out, const Graph& graph, std::span<const double> scores,
                  std::span<const std::string> header_comments = {});

/// Reads score rows, skipping '#' comments and blank lines. Malformed rows
/// raise std::runtime_error with a line number.
std::vector<ScoreRow> read_scores(std::istream& in);
std::vector<ScoreRow> read_scores_file(const std::string& path);

/// Arranges rows from read_scores into a dense per-node vector. Rows naming
/// unknown nodes, repeated nodes or missing nodes are errors.
std::vector<double> scores_for_graph(const Graph& graph, std::span<const ScoreRow> rows);

}  // namespace reprank
