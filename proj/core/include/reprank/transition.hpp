#pragma once

#include "reprank/graph.hpp"
#include "reprank/vectors.hpp"

namespace reprank {

enum class Direction { forward, backward };

/// Column-stochastic transition operator of a graph, stored column-major.
///
/// Forward: column j spreads node j's mass uniformly over its out-neighbors,
/// i.e. entry (i,j) = 1/outdeg(j) for every edge j->i. Backward: column j
/// spreads uniformly over in-neighbors, entry (i,j) = 1/indeg(j) for every
/// edge i->j. A node of zero out-degree (forward) or in-degree (backward)
/// yields an all-zero column, so the operator is sub-stochastic: applying it
/// never increases the L1 norm. Within one column all entries share the value
/// 1/degree, so only that scalar is stored per column.
///
/// Immutable after build; concurrent reads are safe.
class TransitionMatrix {
public:
    static TransitionMatrix build(const Graph& g, Direction direction);

    Direction direction() const { return direction_; }
    NodeId dimension() const { return n_; }
    std::uint64_t entry_count() const { return rows_.size(); }

    /// y = M x. Throws std::invalid_argument on dimension mismatch.
    ScoreVector apply(std::span<const double> x) const;

    /// y += scale * M x, reusing the caller's buffer.
    void apply_add(std::span<const double> x, double scale, std::span<double> y) const;

    // Column inspection (tests, invariant checks).
    std::span<const NodeId> column_rows(NodeId j) const;
    double column_value(NodeId j) const { return weights_[j]; }
    double column_sum(NodeId j) const;

private:
    Direction direction_ = Direction::forward;
    NodeId n_ = 0;
    std::vector<std::uint64_t> offsets_;  // n+1 column starts
    std::vector<NodeId> rows_;
    std::vector<double> weights_;         // per-column uniform entry value, 0 if empty
};

}  // namespace reprank
