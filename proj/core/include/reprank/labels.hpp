#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reprank/graph.hpp"
#include "reprank/vectors.hpp"

namespace reprank {

enum class Label : std::uint8_t { good, spam };

const char* label_name(Label l);
std::optional<Label> parse_label(std::string_view text);

/// Oracle labels keyed by internal node id. Each node carries at most one
/// label; entries are kept sorted by node id so iteration order is stable.
class LabelSet {
public:
    using Entry = std::pair<NodeId, Label>;

    void add(NodeId node, Label label);  // throws std::invalid_argument on relabel
    std::size_t size() const { return entries_.size(); }
    std::size_t count(Label l) const { return l == Label::good ? good_ : spam_; }
    bool contains(NodeId node) const;
    std::optional<Label> label_of(NodeId node) const;
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;  // sorted by node id
    std::size_t good_ = 0;
    std::size_t spam_ = 0;
};

/// Parses "node_id<TAB>label" rows with label in {good, spam}; '#' comments
/// and blank lines are skipped. Unknown label words, node ids missing from
/// the graph and repeated nodes raise std::runtime_error with a line number.
LabelSet load_labels(std::istream& in, const Graph& graph);
LabelSet load_labels_file(const std::string& path, const Graph& graph);

enum class SeedEncoding {
    signed_both,  // good -> +1, spam -> -1
    good_only,    // good -> +1
    spam_only,    // spam -> +1 (badness mass)
};

/// Encodes labels as a length-n seed vector. With normalize set, entries are
/// scaled so the L1 mass of the vector is 1 (no-op on an empty label set).
SeedVector make_seed_vector(const LabelSet& labels, NodeId node_count, SeedEncoding encoding,
                            bool normalize = false);

}  // namespace reprank
