#include "reprank/histogram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace reprank {

Histogram make_histogram(std::span<const double> values, int bin_count)
{
    if (bin_count < 1) throw std::invalid_argument("histogram: need at least one bin");
    if (values.empty()) throw std::invalid_argument("histogram: no values");

    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        const double pad =
            4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), 1.0);
        lo -= pad;
        hi += pad;
    }
    const double width = (hi - lo) / static_cast<double>(bin_count);

    Histogram h;
    h.bins.resize(bin_count);
    for (int b = 0; b < bin_count; ++b) {
        h.bins[b].left = lo + width * b;
        h.bins[b].right = b + 1 == bin_count ? hi : lo + width * (b + 1);
    }
    for (double v : values) {
        auto b = static_cast<std::int64_t>((v - lo) / width);
        b = std::clamp<std::int64_t>(b, 0, bin_count - 1);  // max value joins the last bin
        ++h.bins[b].count;
    }
    return h;
}

namespace {

void put_double(std::ostream& out, double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.write(buf, res.ptr - buf);
}

}  // namespace

void write_histogram(std::ostream& out, const Histogram& h)
{
    for (const HistogramBin& bin : h.bins) {
        put_double(out, bin.left);
        out << '\t';
        put_double(out, bin.right);
        out << '\t' << bin.count << '\t';
        put_double(out, std::log10(static_cast<double>(bin.count) + 1.0));
        out << '\n';
    }
}

}  // namespace reprank
