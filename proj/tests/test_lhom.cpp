#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lipmap/extend.hpp"
#include "lipmap/lhom.hpp"
#include "lipmap/oracle.hpp"
#include "support/families.hpp"

using namespace lipmap;
using lhom::IntSet;

TEST_CASE("IntSet basics", "[lhom]")
{
    IntSet a(VertexInterval{-2, 3});
    REQUIRE(a.is_interval());
    REQUIRE(a.count() == 6);
    REQUIRE(a.to_string() == "-2..3");
    REQUIRE(IntSet::parse("-2..3") == a);

    auto odd = IntSet::from_values({3, -1, 1});
    REQUIRE_FALSE(odd.is_interval());
    REQUIRE(odd.is_progression(2));
    REQUIRE(odd.to_string() == "{-1,1,3}");
    REQUIRE(IntSet::parse("{-1,1,3}") == odd);
    REQUIRE(odd.values_by_magnitude() == std::vector<Value>{1, -1, 3});

    REQUIRE(a.intersect(odd) == odd);
    REQUIRE(IntSet::from_values({0, 1, 2}).is_interval());
    REQUIRE_THROWS_AS(IntSet::parse("1..x"), InputError);
}

TEST_CASE("neighborhood under both edge rules", "[lhom]")
{
    auto zero = IntSet::singleton(0);
    REQUIRE(zero.neighborhood(2, false, 3) == IntSet(VertexInterval{-2, 2}));
    REQUIRE(zero.neighborhood(2, true, 3) == IntSet::from_values({-2, 2}));
    REQUIRE(IntSet::singleton(3).neighborhood(2, true, 3) == IntSet::singleton(1));
    REQUIRE(IntSet::singleton(3).neighborhood(1, false, 3) == IntSet(VertexInterval{2, 3}));
}

TEST_CASE("build_instance", "[lhom]")
{
    auto inst = lhom::build_instance(graphs::path(3), {{0, 0}}, 1, false);
    REQUIRE(inst.target_n == 3);
    REQUIRE(inst.lists[0] == IntSet::singleton(0));
    REQUIRE(inst.lists[1] == IntSet(VertexInterval{-3, 3}));
    REQUIRE(inst.lists[2] == IntSet(VertexInterval{-3, 3}));

    auto strong = lhom::build_instance(graphs::path(2), {}, 2, true);
    REQUIRE(strong.strong);
    REQUIRE(strong.M == 2);
    REQUIRE(strong.lists[0] == IntSet(VertexInterval{-2, 2}));

    REQUIRE_THROWS_AS(lhom::build_instance(graphs::path(3), {{0, 7}}, 1, false), InputError);
}

TEST_CASE("solve", "[lhom]")
{
    auto p3 = lhom::solve(lhom::build_instance(graphs::path(3), {{0, 0}, {2, 2}}, 1, false), true);
    REQUIRE(p3->values == std::vector<Value>{0, 1, 2});
    REQUIRE(*p3->root == 0);
    REQUIRE(p3->values == extend_general(graphs::path(3), {{0, 0}, {2, 2}}, 1).mapping().values);

    REQUIRE_FALSE(lhom::solve(lhom::build_instance(graphs::complete(3), {{0, 0}, {1, 3}}, 1, false), true));
    REQUIRE_FALSE(lhom::solve(lhom::build_instance(graphs::complete(3), {}, 1, true), true));
    REQUIRE_FALSE(lhom::solve(lhom::build_instance(graphs::complete(3), {}, 1, true), false));
}

TEST_CASE("the root requirement changes the answer", "[lhom]")
{
    // A lone vertex prescribed to 1 is a list homomorphism, but nothing can
    // take the value 0.
    auto inst = lhom::build_instance(Graph(1), {{0, 1}}, 1, false);
    REQUIRE(lhom::solve(inst, false));
    REQUIRE_FALSE(lhom::solve(inst, true));
    REQUIRE_FALSE(extend_general(Graph(1), {{0, 1}}, 1));
}

TEST_CASE("instance text format round-trips", "[lhom]")
{
    auto g = graphs::cycle(4);
    auto inst = lhom::build_instance(g, {{0, 2}, {1, 1}}, 1, true);
    std::vector<IntSet> domains = inst.lists;
    REQUIRE(lhom::arc_consistency(inst, domains));
    inst.lists = domains;
    std::stringstream ss;
    lhom::write_instance(ss, inst);
    REQUIRE(ss.str() == "4 1 1\n2..2\n1..1\n{0,2}\n{1,3}\n");
    auto back = lhom::read_instance(ss, g);
    REQUIRE(back.lists == inst.lists);
    REQUIRE(back.target_n == 4);
    REQUIRE(back.strong);

    std::stringstream bad("4 1 1\n0..1\n");
    REQUIRE_THROWS_AS(lhom::read_instance(bad, g), InputError);
}

TEST_CASE("reduction agrees with the extension algorithms and the oracle", "[lhom][property]")
{
    lhom::SolveStats totals;
    std::uint64_t rejected = 0;
    for (const auto& g : testing::unlabeled_connected_up_to(5)) {
        const bool bip = static_cast<bool>(bipartition(g));
        for (Value M : {1, 2}) {
            testing::for_each_prescription(g.order(), 3, -3, 3, [&](const PartialMapping& f) {
                for (bool strong : {false, true}) {
                    if (strong && !bip)
                        continue;
                    const bool direct = strong ? extend_strong(g, f, M).extended() : extend_general(g, f, M).extended();
                    lhom::LHomInstance inst;
                    try {
                        inst = lhom::build_instance(g, f, M, strong);
                    } catch (const InputError&) {
                        ++rejected;
                        REQUIRE_FALSE(direct);
                        continue;
                    }
                    auto sol = lhom::solve(inst, true, &totals);
                    REQUIRE(sol.has_value() == direct);
                    REQUIRE(oracle::brute_extendable(g, f, M, strong).has_value() == direct);
                    if (sol) {
                        REQUIRE(is_valid(g, sol->to_full_mapping(), {M, strong}));
                        REQUIRE(extends(sol->to_full_mapping(), f));
                    }
                }
            });
        }
    }
    REQUIRE(rejected > 0);
    REQUIRE(totals.backtracks == 0);
}

TEST_CASE("propagation keeps domains structured and only shrinks them", "[lhom][property]")
{
    for (const auto& g : testing::unlabeled_connected_up_to(5)) {
        const bool bip = static_cast<bool>(bipartition(g));
        for (Value M : {1, 2}) {
            testing::for_each_prescription(g.order(), 2, -2, 2, [&](const PartialMapping& f) {
                for (bool strong : {false, true}) {
                    if (strong && !bip)
                        continue;
                    lhom::LHomInstance inst;
                    try {
                        inst = lhom::build_instance(g, f, M, strong);
                    } catch (const InputError&) {
                        continue;
                    }
                    auto domains = inst.lists;
                    lhom::SolveStats stats;
                    if (!lhom::arc_consistency(inst, domains, &stats))
                        continue;
                    Value total = 0;
                    for (Vertex v = 0; v < g.order(); ++v) {
                        const auto& d = domains[v];
                        total += inst.lists[v].count();
                        REQUIRE(d.intersect(inst.lists[v]) == d);
                        if (!strong)
                            REQUIRE(d.is_interval());
                        else if (!f.empty())
                            REQUIRE(d.is_progression(2 * M));
                    }
                    REQUIRE(stats.revisions <= total);
                }
            });
        }
    }
}
