#include "reprank/score_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace reprank {

void write_scores(std::ostream& out, const Graph& graph, std::span<const double> scores,
                  std::span<const std::string> header_comments)
{
    if (scores.size() != graph.node_count())
        throw std::invalid_argument("write_scores: score vector length mismatch");

    for (const std::string& comment : header_comments) out << "# " << comment << '\n';

    std::vector<NodeId> order(graph.node_count());
    for (NodeId v = 0; v < graph.node_count(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [scores](NodeId a, NodeId b) {
        return scores[a] != scores[b] ? scores[a] > scores[b] : a < b;
    });

    char buf[32];
    for (NodeId v : order) {
        const auto res = std::to_chars(buf, buf + sizeof buf, scores[v]);
        out << graph.external_id(v) << '\t';
        out.write(buf, res.ptr - buf);
        out << '\n';
    }
}

std::vector<ScoreRow> read_scores(std::istream& in)
{
    std::vector<ScoreRow> rows;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        const std::size_t tab = line.find_first_of(" \t", first);
        const std::size_t val = tab == std::string::npos
                                    ? std::string::npos
                                    : line.find_first_not_of(" \t", tab);
        if (val == std::string::npos)
            throw std::runtime_error("scores line " + std::to_string(line_no) +
                                     ": expected 'node_id<TAB>score'");

        ScoreRow row;
        row.id = line.substr(first, tab - first);
        const char* begin = line.data() + val;
        const char* end = line.data() + line.size();
        const auto res = std::from_chars(begin, end, row.score);
        if (res.ec != std::errc{} || res.ptr != end)
            throw std::runtime_error("scores line " + std::to_string(line_no) +
                                     ": malformed number");
        rows.push_back(std::move(row));
    }
    if (in.bad()) throw std::runtime_error("scores: read failure");
    return rows;
}

std::vector<ScoreRow> read_scores_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scores file: " + path);
    return read_scores(in);
}

std::vector<double> scores_for_graph(const Graph& graph, std::span<const ScoreRow> rows)
{
    std::vector<double> scores(graph.node_count(), 0.0);
    std::vector<char> seen(graph.node_count(), 0);
    for (const ScoreRow& row : rows) {
        const auto node = graph.find_node(row.id);
        if (!node) throw std::runtime_error("scores: unknown node '" + row.id + "'");
        if (seen[*node]) throw std::runtime_error("scores: node '" + row.id + "' repeated");
        seen[*node] = 1;
        scores[*node] = row.score;
    }
    for (NodeId v = 0; v < graph.node_count(); ++v)
        if (!seen[v])
            throw std::runtime_error("scores: missing node '" + graph.external_id(v) + "'");
    return scores;
}

}  // namespace reprank
