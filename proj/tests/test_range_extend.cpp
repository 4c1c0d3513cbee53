#include <catch2/catch_amalgamated.hpp>

#include "lipmap/maxrange.hpp"
#include "lipmap/range_extend.hpp"
#include "support/families.hpp"

using namespace lipmap;

using Status = FixedRangeResult::Status;
using Values = std::vector<Value>;

TEST_CASE("fixed_range_extend", "[range]")
{
    auto p3 = graphs::path(3);
    auto three = fixed_range_extend(p3, {}, 1, 3);
    REQUIRE(three.found());
    REQUIRE(range_of(*three.witness) == 3);
    REQUIRE(is_valid(p3, *three.witness, {1, false}));

    REQUIRE(fixed_range_extend(p3, {}, 1, 4).status == Status::absent);

    for (Value M : {1, 2, 3}) {
        auto one = fixed_range_extend(graphs::cycle(5), {}, M, 1);
        REQUIRE(one.witness->values == Values(5, 0));
    }

    // Window [0,1] with both ends already covered by prescribed values.
    auto covered = fixed_range_extend(p3, {{0, 0}, {2, 1}}, 1, 2);
    REQUIRE(covered.found());
    REQUIRE(range_of(*covered.witness) == 2);
    REQUIRE_FALSE(fixed_range_extend(p3, {{0, 0}, {2, 2}}, 1, 2).found());
}

TEST_CASE("fixed_range_extend for M >= 2", "[range]")
{
    // Single edge with M = 2: images {0, x}, |x| <= 2.
    auto edge = graphs::path(2);
    REQUIRE(fixed_range_extend(edge, {}, 2, 2).found());
    REQUIRE(fixed_range_extend(edge, {}, 2, 3).status == Status::absent);

    // Above the oracle threshold the answer may be unknown but never a wrong
    // absent.
    RangeSearchOptions no_oracle{0, oracle::kDefaultBudget};
    auto p4 = graphs::path(4);
    for (Value r = 1; r <= 4; ++r) {
        auto res = fixed_range_extend(p4, {}, 2, r, no_oracle);
        REQUIRE(res.status != Status::absent);
        if (res.found())
            REQUIRE(range_of(*res.witness) == r);
    }
}

TEST_CASE("max_range_extend", "[range]")
{
    auto p3 = graphs::path(3);
    auto free = max_range_extend(p3, {}, 1);
    REQUIRE(free->range == 3);
    REQUIRE(range_of(free->witness) == 3);

    auto fixed = max_range_extend(p3, {{0, 0}, {1, 0}, {2, 0}}, 1);
    REQUIRE(fixed->range == 1);
    REQUIRE(fixed->witness.values == Values{0, 0, 0});

    auto c4 = max_range_extend(graphs::cycle(4), {{0, 0}, {2, 0}}, 1);
    // Vertices 1 and 3 are independent: [0,1,0,-1] has three values.
    REQUIRE(c4->range == 3);
    REQUIRE(oracle::extension_ranges(graphs::cycle(4), {{0, 0}, {2, 0}}, 1, false) == std::set<int>{1, 2, 3});

    REQUIRE_FALSE(max_range_extend(p3, {{0, 0}, {2, 3}}, 1));
}

TEST_CASE("unprescribed fixed range reaches the maximum range", "[range][property]")
{
    for (const auto& g : testing::unlabeled_connected_up_to(6)) {
        auto res = fixed_range_extend(g, {}, 1, max_range(g, 1));
        REQUIRE(res.found());
        REQUIRE(range_of(*res.witness) == diameter(g).value + 1);
    }
}

TEST_CASE("range-constrained extension agrees with exhaustive search", "[range][property]")
{
    for (const auto& g : testing::unlabeled_connected_up_to(5)) {
        const int diam = diameter(g).value;
        testing::for_each_prescription(g.order(), 3, -3, 3, [&](const PartialMapping& f) {
            auto ranges = oracle::extension_ranges(g, f, 1, false);
            for (int r = 1; r <= diam + 1; ++r) {
                auto res = fixed_range_extend(g, f, 1, r);
                REQUIRE(res.found() == (ranges.count(r) == 1));
                if (res.found()) {
                    REQUIRE(is_valid(g, *res.witness, {1, false}));
                    REQUIRE(extends(*res.witness, f));
                    REQUIRE(range_of(*res.witness) == r);
                }
            }
            auto binary = max_range_extend(g, f, 1, MaxRangeSearch::binary);
            auto linear = max_range_extend(g, f, 1, MaxRangeSearch::linear);
            REQUIRE(binary.has_value() == !ranges.empty());
            REQUIRE(linear.has_value() == !ranges.empty());
            if (binary) {
                REQUIRE(binary->range == *ranges.rbegin());
                REQUIRE(linear->range == binary->range);
                REQUIRE(range_of(binary->witness) == binary->range);
                REQUIRE(extends(binary->witness, f));
            }
        });
    }
}

TEST_CASE("M = 2 range search agrees with exhaustive search on small graphs", "[range][property]")
{
    for (const auto& g : testing::unlabeled_connected_up_to(4)) {
        testing::for_each_prescription(g.order(), 2, -2, 2, [&](const PartialMapping& f) {
            auto ranges = oracle::extension_ranges(g, f, 2, false);
            for (int r = 1; r <= g.order(); ++r) {
                auto res = fixed_range_extend(g, f, 2, r);
                REQUIRE(res.found() == (ranges.count(r) == 1));
            }
            auto best = max_range_extend(g, f, 2);
            REQUIRE(best.has_value() == !ranges.empty());
            if (best) {
                REQUIRE(best->exact);
                REQUIRE(best->range == *ranges.rbegin());
            }
        });
    }
}
