#pragma once

#include <span>
#include <vector>

namespace reprank {

// Dense per-node reputation scores t and seed vector d. Seeds built from
// oracle labels use the {+1, 0, -1} encoding (see labels.hpp).
using ScoreVector = std::vector<double>;
using SeedVector = std::vector<double>;

double l1_norm(std::span<const double> v);

// Throws std::invalid_argument on length mismatch.
double l1_distance(std::span<const double> a, std::span<const double> b);

bool all_finite(std::span<const double> v);

// P+ : zeroes negative components. An entry equal to zero stays zero.
ScoreVector project_positive(std::span<const double> t);

// P- : zeroes positive components.
ScoreVector project_negative(std::span<const double> t);

}  // namespace reprank
