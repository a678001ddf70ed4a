#include "reprank/vectors.hpp"

#include <cmath>
#include <stdexcept>

namespace reprank {

double l1_norm(std::span<const double> v)
{
    double sum = 0.0;
    for (double x : v) sum += std::abs(x);
    return sum;
}

double l1_distance(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("l1_distance: length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
    return sum;
}

bool all_finite(std::span<const double> v)
{
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

ScoreVector project_positive(std::span<const double> t)
{
    ScoreVector out(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] > 0.0) out[i] = t[i];
    return out;
}

ScoreVector project_negative(std::span<const double> t)
{
    ScoreVector out(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i] < 0.0) out[i] = t[i];
    return out;
}

}  // namespace reprank
