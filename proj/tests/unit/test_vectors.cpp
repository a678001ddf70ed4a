#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "reprank/vectors.hpp"

using namespace reprank;

TEST_SUITE("vectors")
{
    TEST_CASE("l1 norm and distance")
    {
        CHECK(l1_norm(ScoreVector{}) == 0.0);
        CHECK(l1_norm(ScoreVector{1.0, -2.0, 0.5}) == 3.5);
        CHECK(l1_distance(ScoreVector{1.0, 2.0}, ScoreVector{0.0, 4.0}) == 3.0);
        CHECK(l1_distance(ScoreVector{}, ScoreVector{}) == 0.0);
        CHECK_THROWS_AS(l1_distance(ScoreVector{1.0}, ScoreVector{1.0, 2.0}),
                        std::invalid_argument);
    }

    TEST_CASE("finiteness scan")
    {
        CHECK(all_finite(ScoreVector{}));
        CHECK(all_finite(ScoreVector{0.0, -1e308, 1e-308}));
        CHECK_FALSE(all_finite(ScoreVector{0.0, std::numeric_limits<double>::infinity()}));
        CHECK_FALSE(all_finite(ScoreVector{std::numeric_limits<double>::quiet_NaN()}));
    }
}
