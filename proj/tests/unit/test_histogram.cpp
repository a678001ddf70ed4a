#include <doctest.h>

#include <cmath>
#include <sstream>

#include "reprank/histogram.hpp"
#include "support/random_fixtures.hpp"

using namespace reprank;

TEST_SUITE("histogram")
{
    TEST_CASE("two bins over a small sample")
    {
        const std::vector<double> values{0.0, 0.0, 1.0};
        const auto h = make_histogram(values, 2);
        REQUIRE(h.bins.size() == 2);
        CHECK(h.bins[0].left == 0.0);
        CHECK(h.bins[0].right == 0.5);
        CHECK(h.bins[1].right == 1.0);
        CHECK(h.bins[0].count == 2);
        CHECK(h.bins[1].count == 1);  // the maximum joins the last bin
    }

    TEST_CASE("identical values land in one bin of a padded range")
    {
        const std::vector<double> values{0.25, 0.25, 0.25};
        const auto h = make_histogram(values, 4);
        REQUIRE(h.bins.size() == 4);
        std::uint64_t total = 0;
        std::uint64_t nonempty = 0;
        for (const auto& bin : h.bins) {
            CHECK(bin.left < bin.right);
            total += bin.count;
            nonempty += bin.count > 0 ? 1 : 0;
        }
        CHECK(total == 3);
        CHECK(nonempty == 1);
        CHECK(h.bins.front().left <= 0.25);
        CHECK(h.bins.back().right >= 0.25);
    }

    TEST_CASE("counts always sum to the number of values")
    {
        fixtures::Rng rng(61);
        for (int trial = 0; trial < 20; ++trial) {
            const auto values = fixtures::random_vector(rng, 1 + fixtures::pick(rng, 200),
                                                        -10.0, 10.0);
            const int bins = 1 + static_cast<int>(fixtures::pick(rng, 12));
            const auto h = make_histogram(values, bins);
            REQUIRE(h.bins.size() == static_cast<std::size_t>(bins));

            std::uint64_t total = 0;
            for (std::size_t i = 0; i < h.bins.size(); ++i) {
                total += h.bins[i].count;
                if (i > 0) CHECK(h.bins[i].left == h.bins[i - 1].right);
            }
            CHECK(total == values.size());
        }
    }

    TEST_CASE("invalid inputs are rejected")
    {
        CHECK_THROWS_AS(make_histogram({}, 4), std::invalid_argument);
        const std::vector<double> values{1.0};
        CHECK_THROWS_AS(make_histogram(values, 0), std::invalid_argument);
        CHECK_THROWS_AS(make_histogram(values, -3), std::invalid_argument);
    }

    TEST_CASE("rows carry bounds, count and log10(count + 1)")
    {
        const std::vector<double> values{0.0, 0.0, 1.0};
        std::ostringstream out;
        write_histogram(out, make_histogram(values, 2));

        std::istringstream in(out.str());
        std::string line;
        int rows = 0;
        const double expected_log[] = {std::log10(3.0), std::log10(2.0)};
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            double left = 0.0, right = 0.0, log_count = 0.0;
            std::uint64_t count = 0;
            fields >> left >> right >> count >> log_count;
            REQUIRE(fields);
            REQUIRE(rows < 2);
            CHECK(count == (rows == 0 ? 2 : 1));
            CHECK(log_count == doctest::Approx(expected_log[rows]).epsilon(1e-12));
            CHECK(left == (rows == 0 ? 0.0 : 0.5));
            CHECK(right == (rows == 0 ? 0.5 : 1.0));
            ++rows;
        }
        CHECK(rows == 2);
    }
}
