#include <doctest.h>

#include <sstream>

#include "reprank/labels.hpp"

using namespace reprank;

namespace {

Graph three_nodes()
{
    std::istringstream in("a b\nb c\n");
    return Graph::load_edge_list(in);
}

}  // namespace

TEST_SUITE("labels")
{
    TEST_CASE("label names round-trip")
    {
        CHECK(label_name(Label::good) == "good");
        CHECK(label_name(Label::spam) == "spam");
        CHECK(parse_label("good") == Label::good);
        CHECK(parse_label("spam") == Label::spam);
        CHECK_FALSE(parse_label("ham").has_value());
        CHECK_FALSE(parse_label("").has_value());
        CHECK_FALSE(parse_label("Good").has_value());
    }

    TEST_CASE("loading resolves external ids and counts classes")
    {
        const auto g = three_nodes();
        std::istringstream in("# judged nodes\na\tgood\n\nc\tspam\n");
        const auto labels = load_labels(in, g);
        CHECK(labels.size() == 2);
        CHECK(labels.count(Label::good) == 1);
        CHECK(labels.count(Label::spam) == 1);
        CHECK(labels.contains(0));
        CHECK_FALSE(labels.contains(1));
        CHECK(labels.label_of(0) == Label::good);
        CHECK(labels.label_of(2) == Label::spam);
        CHECK_FALSE(labels.label_of(1).has_value());
    }

    TEST_CASE("loading rejects bad rows with line numbers")
    {
        const auto g = three_nodes();

        std::istringstream unknown_label("a\tfine\n");
        CHECK_THROWS_WITH_AS(load_labels(unknown_label, g),
                             doctest::Contains("line 1"), std::runtime_error);

        std::istringstream unknown_node("a\tgood\nz\tspam\n");
        CHECK_THROWS_WITH_AS(load_labels(unknown_node, g),
                             doctest::Contains("line 2"), std::runtime_error);

        std::istringstream duplicate("a\tgood\na\tspam\n");
        CHECK_THROWS_WITH_AS(load_labels(duplicate, g),
                             doctest::Contains("line 2"), std::runtime_error);

        std::istringstream extra_field("a\tgood\tnow\n");
        CHECK_THROWS_AS(load_labels(extra_field, g), std::runtime_error);
    }

    TEST_CASE("relabeling through the set interface throws")
    {
        LabelSet labels;
        labels.add(3, Label::good);
        labels.add(1, Label::spam);
        CHECK_THROWS_AS(labels.add(3, Label::spam), std::invalid_argument);
        CHECK(labels.entries().front().first == 1);
        CHECK(labels.entries().back().first == 3);
    }

    TEST_CASE("seed encodings")
    {
        LabelSet labels;
        labels.add(0, Label::good);
        labels.add(2, Label::spam);
        labels.add(3, Label::spam);

        CHECK(make_seed_vector(labels, 4, SeedEncoding::signed_both) ==
              SeedVector{1.0, 0.0, -1.0, -1.0});
        CHECK(make_seed_vector(labels, 4, SeedEncoding::good_only) ==
              SeedVector{1.0, 0.0, 0.0, 0.0});
        CHECK(make_seed_vector(labels, 4, SeedEncoding::spam_only) ==
              SeedVector{0.0, 0.0, 1.0, 1.0});
    }

    TEST_CASE("seed normalization divides by total labeled mass")
    {
        LabelSet labels;
        labels.add(0, Label::good);
        labels.add(1, Label::spam);
        labels.add(2, Label::spam);
        labels.add(3, Label::spam);

        const auto d = make_seed_vector(labels, 4, SeedEncoding::signed_both, true);
        CHECK(d[0] == doctest::Approx(0.25));
        CHECK(d[1] == doctest::Approx(-0.25));
        CHECK(l1_norm(d) == doctest::Approx(1.0));

        // Only the selected class contributes mass under one-sided encodings.
        const auto spam = make_seed_vector(labels, 4, SeedEncoding::spam_only, true);
        CHECK(spam[1] == doctest::Approx(1.0 / 3.0));
        CHECK(spam[0] == 0.0);

        // Nothing to normalize: the zero vector stays zero.
        const LabelSet empty;
        CHECK(make_seed_vector(empty, 3, SeedEncoding::signed_both, true) ==
              SeedVector{0.0, 0.0, 0.0});
    }

    TEST_CASE("seed vector rejects out-of-range labels")
    {
        LabelSet labels;
        labels.add(5, Label::good);
        CHECK_THROWS_AS(make_seed_vector(labels, 3, SeedEncoding::signed_both),
                        std::invalid_argument);
    }
}
