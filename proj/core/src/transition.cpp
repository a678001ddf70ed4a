#include "reprank/transition.hpp"

#include <stdexcept>

namespace reprank {

TransitionMatrix TransitionMatrix::build(const Graph& g, Direction direction)
{
    TransitionMatrix m;
    m.direction_ = direction;
    m.n_ = g.node_count();
    m.offsets_.assign(m.n_ + 1, 0);
    m.weights_.assign(m.n_, 0.0);
    m.rows_.reserve(g.edge_count());

    // Column j of the forward operator lists the out-neighbors of j, column j
    // of the backward operator lists the in-neighbors.
    for (NodeId j = 0; j < m.n_; ++j) {
        const auto col = direction == Direction::forward ? g.out_neighbors(j)
                                                         : g.in_neighbors(j);
        m.rows_.insert(m.rows_.end(), col.begin(), col.end());
        m.offsets_[j + 1] = m.rows_.size();
        if (!col.empty()) m.weights_[j] = 1.0 / static_cast<double>(col.size());
    }
    return m;
}

ScoreVector TransitionMatrix::apply(std::span<const double> x) const
{
    ScoreVector y(n_, 0.0);
    apply_add(x, 1.0, y);
    return y;
}

void TransitionMatrix::apply_add(std::span<const double> x, double scale, std::span<double> y) const
{
    if (x.size() != n_ || y.size() != n_)
        throw std::invalid_argument("TransitionMatrix::apply: dimension mismatch");
    for (NodeId j = 0; j < n_; ++j) {
        const double w = scale * weights_[j] * x[j];
        if (w == 0.0) continue;
        const std::uint64_t end = offsets_[j + 1];
        for (std::uint64_t k = offsets_[j]; k < end; ++k) y[rows_[k]] += w;
    }
}

std::span<const NodeId> TransitionMatrix::column_rows(NodeId j) const
{
    return {rows_.data() + offsets_[j], rows_.data() + offsets_[j + 1]};
}

double TransitionMatrix::column_sum(NodeId j) const
{
    double sum = 0.0;
    const std::uint64_t end = offsets_[j + 1];
    for (std::uint64_t k = offsets_[j]; k < end; ++k) sum += weights_[j];
    return sum;
}

}  // namespace reprank
