#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "lipmap/mapping.hpp"
#include "lipmap/oracle.hpp"
#include "support/families.hpp"

using namespace lipmap;

TEST_CASE("is_valid", "[mapping]")
{
    REQUIRE(is_valid(graphs::path(3), {{0, 1, 2}, 0}, {1, false}));

    auto k3 = is_valid(graphs::complete(3), {{0, 1, 2}, 0}, {1, false});
    REQUIRE_FALSE(k3);
    REQUIRE(k3.failure == Validity::Failure::edge);
    REQUIRE(*k3.edge == Edge{0, 2});

    REQUIRE(is_valid(graphs::path(2), {{0, 2}, 0}, {2, true}));
    REQUIRE_FALSE(is_valid(graphs::path(2), {{0, 1}, 0}, {2, true}));

    auto unrooted = is_valid(graphs::path(2), {{1, 1}, 0}, {1, false});
    REQUIRE(unrooted.failure == Validity::Failure::root_not_zero);
}

TEST_CASE("is_valid input errors", "[mapping]")
{
    REQUIRE_THROWS_AS(is_valid(graphs::path(3), {{0, 1}, 0}, {1, false}), InputError);
    REQUIRE_THROWS_AS(is_valid(graphs::path(2), {{0, 1}, 0}, {0, false}), InputError);
    REQUIRE_THROWS_AS(is_valid(Graph(2), {{0, 0}, 0}, {1, false}), PreconditionError);
}

TEST_CASE("range_of counts distinct values, span_of max - min + 1", "[mapping]")
{
    REQUIRE(range_of({{0, 1, 2}, 0}) == 3);
    REQUIRE(range_of({{0, 0, 0}, 0}) == 1);
    REQUIRE(range_of({{0, 2, 0, 2}, 0}) == 2);
    REQUIRE(span_of({{0, 2, 0, 2}, 0}) == 3);
}

TEST_CASE("strong_mapping_witness", "[mapping]")
{
    auto c4 = strong_mapping_witness(graphs::cycle(4), 0, 1);
    REQUIRE(c4->values == std::vector<Value>{0, 1, 0, 1});
    REQUIRE(is_valid(graphs::cycle(4), *c4, {1, true}));
    REQUIRE_FALSE(strong_mapping_witness(graphs::complete(3), 0, 1));
    REQUIRE_FALSE(strong_mapping_witness(graphs::complete(3), 0, 5));
    REQUIRE(strong_mapping_witness(graphs::path(2), 0, 3)->values == std::vector<Value>{0, 3});
}

TEST_CASE("is_widom_rowlinson", "[mapping]")
{
    REQUIRE(is_widom_rowlinson(graphs::path(4), {{0, 1, 0, -1}, 0}));
    REQUIRE_FALSE(is_widom_rowlinson(graphs::path(3), {{0, 1, 2}, 0}));
    REQUIRE(is_widom_rowlinson(graphs::cycle(5), {{0, 0, 0, 0, 0}, 0}));
    // Red next to blue is not allowed.
    REQUIRE_FALSE(is_widom_rowlinson(graphs::path(3), {{0, 1, -1}, 0}));
}

TEST_CASE("Widom-Rowlinson configurations are the 1-Lipschitz mappings into {-1,0,1}", "[mapping][property]")
{
    // Independent count: red/blue/uncolored labelings with no red-blue edge,
    // with the root uncolored.
    for (const auto& g : testing::unlabeled_connected_up_to(5)) {
        const int n = g.order();
        std::uint64_t configurations = 0;
        std::vector<int> colour(static_cast<std::size_t>(n), 0);
        for (int code = 0; code < static_cast<int>(std::pow(3, n)); ++code) {
            int c = code;
            for (int v = 0; v < n; ++v, c /= 3)
                colour[v] = c % 3; // 0 uncolored, 1 red, 2 blue
            if (colour[0] != 0)
                continue;
            bool ok = true;
            for (auto [u, v] : g.edges())
                ok = ok && !(colour[u] + colour[v] == 3);
            configurations += ok;
        }
        std::uint64_t wr = 0;
        oracle::for_each_mapping(g, 0, {1, false}, [&](const FullMapping& f) {
            wr += is_widom_rowlinson(g, f);
            return true;
        });
        REQUIRE(wr == configurations);
    }
}

TEST_CASE("strong witness exists iff the graph is bipartite", "[mapping][property]")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& g : testing::labeled_graphs(n)) {
            for (Value M : {1, 2}) {
                auto w = strong_mapping_witness(g, 0, M);
                REQUIRE(w.has_value() == static_cast<bool>(bipartition(g)));
                if (w)
                    REQUIRE(is_valid(g, *w, {M, true}));
            }
        }
    }
}
