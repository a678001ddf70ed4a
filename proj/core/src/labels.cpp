#include "reprank/labels.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace reprank {

const char* label_name(Label l)
{
    return l == Label::good ? "good" : "spam";
}

std::optional<Label> parse_label(std::string_view text)
{
    if (text == "good") return Label::good;
    if (text == "spam") return Label::spam;
    return std::nullopt;
}

void LabelSet::add(NodeId node, Label label)
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                                     [](const Entry& e, NodeId v) { return e.first < v; });
    if (it != entries_.end() && it->first == node)
        throw std::invalid_argument("node labeled twice: " + std::to_string(node));
    entries_.insert(it, {node, label});
    (label == Label::good ? good_ : spam_) += 1;
}

bool LabelSet::contains(NodeId node) const
{
    return label_of(node).has_value();
}

std::optional<Label> LabelSet::label_of(NodeId node) const
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), node,
                                     [](const Entry& e, NodeId v) { return e.first < v; });
    if (it == entries_.end() || it->first != node) return std::nullopt;
    return it->second;
}

LabelSet load_labels(std::istream& in, const Graph& graph)
{
    LabelSet labels;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        const auto fail = [line_no](const std::string& what) {
            throw std::runtime_error("labels line " + std::to_string(line_no) + ": " + what);
        };

        const std::size_t tab = line.find_first_of(" \t", first);
        if (tab == std::string::npos) fail("expected 'node_id<TAB>label'");
        const std::size_t val = line.find_first_not_of(" \t", tab);
        if (val == std::string::npos) fail("expected 'node_id<TAB>label'");

        const std::string id = line.substr(first, tab - first);
        std::string word = line.substr(val);
        while (!word.empty() && (word.back() == ' ' || word.back() == '\t')) word.pop_back();

        const auto label = parse_label(word);
        if (!label) fail("unknown label '" + word + "' (expected good or spam)");
        const auto node = graph.find_node(id);
        if (!node) fail("node '" + id + "' not present in the graph");
        try {
            labels.add(*node, *label);
        } catch (const std::invalid_argument&) {
            fail("node '" + id + "' labeled twice");
        }
    }
    if (in.bad()) throw std::runtime_error("labels: read failure");
    return labels;
}

LabelSet load_labels_file(const std::string& path, const Graph& graph)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open labels file: " + path);
    return load_labels(in, graph);
}

SeedVector make_seed_vector(const LabelSet& labels, NodeId node_count, SeedEncoding encoding,
                            bool normalize)
{
    SeedVector d(node_count, 0.0);
    for (const auto& [node, label] : labels.entries()) {
        if (node >= node_count)
            throw std::invalid_argument("labeled node outside the graph");
        switch (encoding) {
        case SeedEncoding::signed_both:
            d[node] = label == Label::good ? 1.0 : -1.0;
            break;
        case SeedEncoding::good_only:
            if (label == Label::good) d[node] = 1.0;
            break;
        case SeedEncoding::spam_only:
            if (label == Label::spam) d[node] = 1.0;
            break;
        }
    }
    if (normalize) {
        const double mass = l1_norm(d);
        if (mass > 0.0)
            for (double& x : d) x /= mass;
    }
    return d;
}

}  // namespace reprank
