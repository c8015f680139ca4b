#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "lowsum/errors.hpp"
#include "lowsum/generators.hpp"
#include "lowsum/local_search.hpp"
#include "lowsum/prng.hpp"
#include "test_support.hpp"

using namespace lowsum;
using lowsum::testing::labeling_from_signs;
using lowsum::testing::make_l4;

TEST_CASE("boundary_set lists the edges a role swap touches") {
    SpanningSubgraph matching(4, {{1, 2}, {3, 4}});
    CHECK(boundary_set(matching, 1, 3) == std::vector<Edge>{{1, 2}, {3, 4}});

    SpanningSubgraph one_edge(4, {{1, 2}});
    CHECK(boundary_set(one_edge, 1, 2).empty());

    SpanningSubgraph edgeless(4, {});
    CHECK(boundary_set(edgeless, 2, 4).empty());

    CHECK_THROWS_AS(boundary_set(matching, 2, 2), Error);
    try {
        boundary_set(matching, 2, 2);
        FAIL("expected SameVertex");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::same_vertex);
    }
}

TEST_CASE("swap_roles exchanges adjacencies and is an involution") {
    SpanningSubgraph matching(4, {{1, 2}, {3, 4}});
    SpanningSubgraph swapped = swap_roles(matching, 1, 3);
    CHECK(swapped.edges() == std::vector<Edge>{{1, 4}, {2, 3}});

    SpanningSubgraph back = swap_roles(swapped, 1, 3);
    CHECK(back.edges() == matching.edges());

    // isolated pair: unchanged
    SpanningSubgraph lonely(5, {{1, 2}});
    CHECK(swap_roles(lonely, 3, 5).edges() == lonely.edges());

    SplitMix64 rng(4);
    for (int round = 0; round < 10; ++round) {
        SpanningSubgraph h = gen_regular_subgraph(10, 3, rng.next());
        int u = 1 + static_cast<int>(rng.next_below(10));
        int v = 1 + static_cast<int>(rng.next_below(10));
        if (u == v) continue;
        SpanningSubgraph once = swap_roles(h, u, v);
        CHECK(once.max_degree() == h.max_degree());
        CHECK(once.edge_count() == h.edge_count());
        CHECK(swap_roles(once, u, v).edges() == h.edges());
    }
}

TEST_CASE("swap_delta equals the recomputed difference") {
    EdgeLabeling l4 = make_l4();
    SpanningSubgraph matching(4, {{1, 2}, {3, 4}});
    CHECK(swap_delta(l4, matching, 1, 3) == 0); // {23,14}: -1+1 = 0, same as start

    SpanningSubgraph lonely(4, {{1, 2}});
    CHECK(swap_delta(l4, lonely, 3, 4) == 0);

    SplitMix64 rng(8);
    for (int round = 0; round < 40; ++round) {
        int n = 8;
        EdgeLabeling labeling = gen_zero_sum_labeling(n, rng.next(), LabelingPattern::uniform);
        int degree = 1 + static_cast<int>(rng.next_below(3));
        SpanningSubgraph h = gen_regular_subgraph(n, degree, rng.next());
        int u = 1 + static_cast<int>(rng.next_below(n));
        int v = 1 + static_cast<int>(rng.next_below(n));
        if (u == v) continue;
        std::int64_t delta = swap_delta(labeling, h, u, v);
        SpanningSubgraph swapped = swap_roles(h, u, v);
        CHECK(delta == swapped.label_sum(labeling) - h.label_sum(labeling));
        CHECK(delta % 2 == 0);
        CHECK(std::llabs(delta) <= 4 * h.max_degree());
    }
}

TEST_CASE("regular descent always reaches the 2*Delta window") {
    SplitMix64 rng(15);
    for (int round = 0; round < 24; ++round) {
        int n = 8 + 4 * static_cast<int>(rng.next_below(3)); // 8, 12, 16
        int degree = 1 + round % 3;
        EdgeLabeling labeling = gen_zero_sum_labeling(n, rng.next(), LabelingPattern::uniform);
        SpanningSubgraph start = gen_regular_subgraph(n, degree, rng.next());
        DescentRule rule =
            round % 2 == 0 ? DescentRule::best_improvement : DescentRule::first_improvement;

        DescendResult result = descend(labeling, start, rule, true);
        CHECK_FALSE(result.stalled);
        CHECK(result.certified);
        CHECK(std::llabs(result.trace.back()) <= 2 * degree);
        CHECK(result.trace.back() == result.subgraph.label_sum(labeling));
        CHECK(result.subgraph.is_regular());
        CHECK(result.subgraph.max_degree() == degree);
        CHECK(static_cast<int>(result.trace.size()) - 1 <= start.edge_count());
        for (std::size_t i = 0; i + 1 < result.trace.size(); ++i) {
            CHECK(std::llabs(result.trace[i + 1] - result.trace[i]) <= 4 * degree);
            CHECK(std::llabs(result.trace[i + 1]) < std::llabs(result.trace[i]));
        }
    }
}

TEST_CASE("descent inside the window takes no steps") {
    EdgeLabeling l4 = make_l4();
    SpanningSubgraph matching(4, {{1, 2}, {3, 4}});
    REQUIRE(matching.label_sum(l4) == 0);
    DescendResult result = descend(l4, matching, DescentRule::best_improvement, true);
    CHECK(result.trace.size() == 1);
    CHECK_FALSE(result.stalled);
    CHECK(result.subgraph.edges() == matching.edges());
}

TEST_CASE("an all-positive labeling stalls every swap above the window") {
    // every copy of any H has sum m(H), so no swap can improve
    std::vector<int> signs(8 * 7 / 2, +1);
    EdgeLabeling sunny = labeling_from_signs(8, signs);
    SpanningForest path = gen_forest(8, ForestKind::path, 0);
    SpanningSubgraph h(8, path.edges()); // Delta = 2, m = 7 > 2*Delta

    DescendResult result = descend(sunny, h, DescentRule::best_improvement);
    CHECK(result.stalled);
    CHECK_FALSE(result.certified);
    CHECK(result.trace.size() == 1);
    CHECK(result.trace.back() == 7);
    // stall certificate: no pair improves |c|
    for (int u = 1; u < 8; ++u) {
        for (int v = u + 1; v <= 8; ++v) {
            std::int64_t moved = result.trace.back() + swap_delta(sunny, result.subgraph, u, v);
            CHECK(std::llabs(moved) >= std::llabs(result.trace.back()));
        }
    }

    CHECK_THROWS_AS(descend(sunny, h, DescentRule::best_improvement, true), Error);
    try {
        descend(sunny, h, DescentRule::best_improvement, true);
        FAIL("expected NotZeroSum");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_zero_sum);
    }
}

TEST_CASE("regular double counting: degree-weighted label sum vanishes") {
    SplitMix64 rng(27);
    for (int round = 0; round < 10; ++round) {
        int n = 12;
        EdgeLabeling labeling = gen_zero_sum_labeling(n, rng.next(), LabelingPattern::uniform);
        int degree = 1 + static_cast<int>(rng.next_below(3));
        SpanningSubgraph h = gen_regular_subgraph(n, degree, rng.next());
        std::int64_t weighted = 0;
        for (int u = 1; u <= n; ++u) {
            for (int v = u + 1; v <= n; ++v) {
                weighted += (h.degree(u) + h.degree(v)) * labeling.label(u, v);
            }
        }
        CHECK(weighted == 0); // 2 * Delta * c(K) for regular H
    }
}

TEST_CASE("gen_regular_subgraph produces simple regular graphs deterministically") {
    for (int degree : {1, 2, 3}) {
        for (std::uint64_t seed : {1ull, 9ull}) {
            SpanningSubgraph h = gen_regular_subgraph(12, degree, seed);
            CHECK(h.is_regular());
            CHECK(h.max_degree() == degree);
            CHECK(h.edge_count() == 12 * degree / 2);
        }
        SpanningSubgraph a = gen_regular_subgraph(12, degree, 5);
        SpanningSubgraph b = gen_regular_subgraph(12, degree, 5);
        CHECK(a.edges() == b.edges());
    }
    CHECK_THROWS_AS(gen_regular_subgraph(9, 3, 0), Error); // odd degree sum
    CHECK_THROWS_AS(gen_regular_subgraph(4, 4, 0), Error);
}

TEST_CASE("subgraph accepts cycles that forests reject") {
    SpanningSubgraph triangle(4, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(triangle.edge_count() == 3);
    CHECK_FALSE(triangle.is_regular()); // vertex 4 is isolated
    CHECK(triangle.has_edge(1, 3));
    CHECK_FALSE(triangle.has_edge(1, 4));
}
