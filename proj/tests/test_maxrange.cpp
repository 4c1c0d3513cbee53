#include <catch2/catch_amalgamated.hpp>

#include "lipmap/maxrange.hpp"
#include "lipmap/oracle.hpp"
#include "support/families.hpp"

using namespace lipmap;

TEST_CASE("max_range closed form", "[maxrange]")
{
    REQUIRE(max_range(graphs::path(3), 1) == 3);
    REQUIRE(max_range(graphs::complete(3), 2) == 4);
    REQUIRE(max_range(graphs::cycle(4), 1) == 3);
    REQUIRE(oracle::stats(graphs::cycle(4), 0, {1, false}).max_range_distinct == 3);
    REQUIRE_THROWS_AS(max_range(Graph(2), 1), PreconditionError);
}

TEST_CASE("max_range_witness", "[maxrange]")
{
    auto p3 = max_range_witness(graphs::path(3), 1);
    REQUIRE(p3.values == std::vector<Value>{0, 1, 2});
    REQUIRE(p3.root == 0);
    REQUIRE(range_of(p3) == 3);

    auto k3 = max_range_witness(graphs::complete(3), 1);
    REQUIRE(k3.values == std::vector<Value>{0, 1, 1});
    REQUIRE(range_of(k3) == 2);

    // Star with center 0: the smallest diametral pair is (1, 2), so the
    // witness is rooted at leaf 1.
    auto star = max_range_witness(graphs::star(3), 1);
    REQUIRE(star.root == 1);
    REQUIRE(star.values == std::vector<Value>{1, 0, 2, 2});
    REQUIRE(range_of(star) == 3);
}

TEST_CASE("max_range_strong", "[maxrange]")
{
    auto c4 = max_range_strong(graphs::cycle(4), 1);
    REQUIRE(c4->value == 3);
    REQUIRE(c4->witness.values == std::vector<Value>{0, 1, 2, 1});
    REQUIRE(is_valid(graphs::cycle(4), c4->witness, {1, true}));
    REQUIRE_FALSE(max_range_strong(graphs::complete(3), 1));
    auto edge = max_range_strong(graphs::path(2), 2);
    REQUIRE(edge->value == 4);
    REQUIRE(edge->witness.values == std::vector<Value>{0, 2});
}

TEST_CASE("for M >= 2 the closed form exceeds both measured maxima", "[maxrange]")
{
    // Single edge, M = 2: images {0,x} with |x| <= 2, so at most 2 distinct
    // values and span at most 3, against M(diam+1) = 4.
    auto s = oracle::stats(graphs::path(2), 0, {2, false});
    REQUIRE(s.max_range_distinct == 2);
    REQUIRE(s.max_span == 3);
    REQUIRE(max_range(graphs::path(2), 2) == 4);
}

TEST_CASE("maximum range against exhaustive enumeration", "[maxrange][property]")
{
    for (const auto& g : testing::unlabeled_connected_up_to(6)) {
        const int diam = diameter(g).value;
        for (Value M : {1, 2, 3}) {
            auto s = oracle::stats(g, 0, {M, false});
            auto w = max_range_witness(g, M);
            REQUIRE(is_valid(g, w, {M, false}));
            REQUIRE(range_of(w) == diam + 1);
            REQUIRE(span_of(w) == M * diam + 1);
            // Measured: the span bound M*diam + 1 is attained exactly; the
            // distinct count is capped by both n and the span.
            REQUIRE(s.max_span == M * diam + 1);
            REQUIRE(s.max_range_distinct <= std::min<Value>(g.order(), M * diam + 1));
            REQUIRE(s.max_range_distinct <= max_range(g, M));
            if (M == 1)
                REQUIRE(s.max_range_distinct == max_range(g, 1));
        }
    }
}

TEST_CASE("strong maximum range against exhaustive enumeration", "[maxrange][property]")
{
    for (const auto& g : testing::unlabeled_connected_up_to(6)) {
        const int diam = diameter(g).value;
        for (Value M : {1, 2}) {
            auto strong = max_range_strong(g, M);
            REQUIRE(strong.has_value() == static_cast<bool>(bipartition(g)));
            auto s = oracle::stats(g, 0, {M, true});
            REQUIRE((s.count > 0) == strong.has_value());
            if (!strong)
                continue;
            REQUIRE(is_valid(g, strong->witness, {M, true}));
            REQUIRE(strong->value == M * (diam + 1));
            REQUIRE(s.max_span == M * diam + 1);
            REQUIRE(s.max_range_distinct == diam + 1);
        }
    }
}
