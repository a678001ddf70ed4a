#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace reprank {

struct HistogramBin {
    double left = 0.0;
    double right = 0.0;
    std::uint64_t count = 0;
};

/// Equal-width histogram over [min, max] of the values. A degenerate range
/// (all values equal) is widened by a machine-epsilon-scale pad so every
/// value still lands in exactly one bin; counts always sum to the input size.
struct Histogram {
    std::vector<HistogramBin> bins;
};

Histogram make_histogram(std::span<const double> values, int bin_count);

/// One "left<TAB>right<TAB>count<TAB>log10(count+1)" row per bin.
void write_histogram(std::ostream& out, const Histogram& h);

}  // namespace reprank
