#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "lowsum/errors.hpp"
#include "lowsum/generators.hpp"
#include "lowsum/oracle.hpp"
#include "lowsum/prng.hpp"
#include "test_support.hpp"

using namespace lowsum;
using lowsum::testing::labeling_from_signs;
using lowsum::testing::make_l4;
using lowsum::testing::make_p3;

TEST_CASE("distribution over all copies of the path fixture") {
    EdgeLabeling l4 = make_l4();
    SumDistribution dist = enumerate_sums(l4, make_p3());
    std::uint64_t total = 0;
    for (const auto& [sum, count] : dist.counts) total += count;
    CHECK(total == 24);
    CHECK(dist.total == 24);
    CHECK(dist.mean() == ExactValue(0));

    SpanningForest edgeless(4, {});
    SumDistribution flat = enumerate_sums(l4, edgeless);
    CHECK(flat.counts.at(0) == 24);
    CHECK(flat.counts.size() == 1);
}

TEST_CASE("min_abs_sum agrees with an independent per-shape argument") {
    EdgeLabeling l4 = make_l4();

    // Star copies are determined by the center: c = sum of labels at it.
    SpanningForest star = gen_forest(4, ForestKind::star, 0);
    std::int64_t best_center = 1 << 20;
    for (int v = 1; v <= 4; ++v) {
        best_center = std::min<std::int64_t>(best_center, std::llabs(l4.star_sum(v)));
    }
    CHECK(best_center == 1);
    CHECK(min_abs_sum(l4, star) == 1);

    // A single edge always sums to +-1.
    SpanningForest one_edge(4, {{1, 2}});
    CHECK(min_abs_sum(l4, one_edge) == 1);

    CHECK(min_abs_sum(l4, make_p3()) == 0);
}

TEST_CASE("mean identity holds for non-zero-sum labelings too") {
    SplitMix64 rng(17);
    for (int round = 0; round < 6; ++round) {
        int n = 5;
        // random unconstrained labeling
        std::vector<int> signs(n * (n - 1) / 2);
        for (int& s : signs) s = rng.next_bool() ? 1 : -1;
        EdgeLabeling labeling = labeling_from_signs(n, signs);
        SpanningForest forest = gen_forest(n, ForestKind::random_tree, rng.next());
        SumDistribution dist = enumerate_sums(labeling, forest);
        ExactValue expected = ExactValue::ratio(labeling.total_sum() * forest.edge_count(),
                                                labeling.edge_count());
        CHECK(dist.mean() == expected);
    }
}

TEST_CASE("conditional brute force matches the fixture values") {
    EdgeLabeling l4 = make_l4();
    SpanningForest p3 = make_p3();
    VertexOrdering natural = VertexOrdering::identity(4);

    std::vector<int> two{2, 1};
    CHECK(conditional_expectation_bruteforce(l4, p3, natural, two) == ExactValue(2));
    std::vector<int> empty;
    CHECK(conditional_expectation_bruteforce(l4, p3, natural, empty) == ExactValue(0));
    std::vector<int> full{3, 1, 4, 2};
    ExactValue value = conditional_expectation_bruteforce(l4, p3, natural, full);
    CHECK(value.is_integer());
    CHECK(value.as_integer() == copy_sum(l4, p3, Embedding(std::vector<int>{0, 3, 1, 4, 2})));

    std::vector<int> duplicate{2, 2};
    CHECK_THROWS_AS(conditional_expectation_bruteforce(l4, p3, natural, duplicate), Error);
}

TEST_CASE("cap handling refuses large instances") {
    EdgeLabeling big = gen_zero_sum_labeling(12, 1, LabelingPattern::uniform);
    SpanningForest tree = gen_forest(12, ForestKind::random_tree, 1);
    CHECK_THROWS_AS(enumerate_sums(big, tree), Error);
    CHECK_THROWS_AS(enumerate_sums(big, tree, 12), Error); // hard ceiling stays at 10
    try {
        enumerate_sums(big, tree);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::too_large);
    }

    // raising the cap to 9 really enumerates 9!
    EdgeLabeling nine = gen_zero_sum_labeling(9, 1, LabelingPattern::uniform);
    SpanningForest star9 = gen_forest(9, ForestKind::star, 0);
    CHECK_THROWS_AS(enumerate_sums(nine, star9), Error);
    SumDistribution dist = enumerate_sums(nine, star9, 9);
    CHECK(dist.total == 362880);
    CHECK(dist.mean() == ExactValue(0));
}
