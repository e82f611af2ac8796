/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <prc/catalog.hh>
#include <prc/domination.hh>
#include <prc/errors.hh>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace prc;
using namespace test_support;

namespace
{
    auto sorted(std::vector<VertexSet> sets) -> std::vector<VertexSet>
    {
        std::sort(sets.begin(), sets.end());
        return sets;
    }
}

TEST_CASE("is_dominating")
{
    CHECK(is_dominating(complete(4), VertexSet::of({0})));
    CHECK(! is_dominating(path(3), VertexSet::of({0})));
    CHECK(is_dominating(path(3), VertexSet::of({1})));
    // Vertex 3 of P_7 has both neighbours outside {0,1,5,6}.
    CHECK(! is_dominating(path(7), VertexSet::of({0, 1, 5, 6})));
    CHECK(is_dominating(cycle(7), v({2, 6, 4})));
}

TEST_CASE("is_perfect_dominating")
{
    CHECK(is_perfect_dominating(path(8), v({1, 2, 5, 8})));
    CHECK(is_perfect_dominating(path(8), VertexSet::first(8)));
    CHECK(! is_perfect_dominating(cycle(4), VertexSet::of({0, 2})));
    CHECK(! is_perfect_dominating(path(3), VertexSet{}));
    CHECK(is_perfect_dominating(build_graph(0, {}), VertexSet{}));
}

TEST_CASE("domination numbers")
{
    CHECK(domination_numbers(path(8)).gamma_p == 3);
    CHECK(domination_numbers(cycle(11)).gamma_p == 5);
    CHECK(domination_numbers(path(11)).gamma_p == 4);
    CHECK(domination_numbers(path(13)).gamma_p == 5);
    for (int n = 1 ; n <= 9 ; ++n)
        CHECK(domination_numbers(complete(n)).gamma == 1);
    CHECK_THROWS_AS(domination_numbers(build_graph(0, {})), Error);
}

TEST_CASE("perfect dominating sets of P_8 and P_13")
{
    CHECK(sorted(enumerate_perfect_dominating_sets(path(8), 4)) == sorted({
                v({1, 2, 5, 8}), v({1, 4, 5, 8}), v({1, 4, 7, 8}),
                v({2, 5, 6, 7}), v({2, 3, 6, 7}), v({2, 3, 4, 7})}));
    CHECK(sorted(enumerate_perfect_dominating_sets(path(8), 3)) == sorted({v({2, 5, 8}), v({1, 4, 7})}));
    CHECK(sorted(enumerate_perfect_dominating_sets(path(11), 4)) == sorted({v({1, 4, 7, 10}), v({2, 5, 8, 11})}));
    CHECK(sorted(enumerate_perfect_dominating_sets(path(13), 5)) == sorted({
                v({1, 4, 7, 10, 13}), v({2, 3, 6, 9, 12}), v({2, 5, 6, 9, 12}),
                v({2, 5, 8, 9, 12}), v({2, 5, 8, 11, 12})}));

    auto m = enumerate_perfect_dominating_sets(path(13), 6);
    CHECK(m.size() == 20);
    CHECK(std::is_sorted(m.begin(), m.end(), [] (VertexSet a, VertexSet b) { return a.bits() < b.bits(); }));
}

TEST_CASE("enumeration agrees with a subset-filter oracle")
{
    std::mt19937_64 rng{31};
    for (int trial = 0 ; trial < 60 ; ++trial) {
        int n = std::uniform_int_distribution<int>{1, 10}(rng);
        int pairs = n * (n - 1) / 2;
        std::uint64_t mask = pairs ? std::uniform_int_distribution<std::uint64_t>{0, (std::uint64_t{1} << pairs) - 1}(rng) : 0;
        auto g = graph_from_edge_mask(n, mask);
        auto adj = to_oracle(g);
        for (int k = 0 ; k <= n ; ++k) {
            std::vector<oracle::Set> ours;
            for (auto s : enumerate_perfect_dominating_sets(g, k))
                ours.push_back(to_oracle(s));
            std::sort(ours.begin(), ours.end());
            auto expected = oracle::perfect_dominating_sets(adj, k);
            std::sort(expected.begin(), expected.end());
            REQUIRE(ours == expected);
        }
    }

    CHECK(enumerate_perfect_dominating_sets(path(8), 5).size() == oracle::perfect_dominating_sets(to_oracle(path(8)), 5).size());
    CHECK(enumerate_perfect_dominating_sets(build_graph(1, {}), 0).empty());
    CHECK_THROWS_AS(enumerate_perfect_dominating_sets(path(4), 5), Error);
}

TEST_CASE("predicates agree with the oracle on every subset, n <= 6")
{
    for (int n = 1 ; n <= 6 ; ++n)
        for (auto & g : graphs_up_to_isomorphism(n)) {
            auto adj = to_oracle(g);
            for (std::uint64_t bits = 0 ; bits < (std::uint64_t{1} << n) ; ++bits) {
                VertexSet s{bits};
                REQUIRE(is_dominating(g, s) == oracle::dominating(adj, to_oracle(s)));
                REQUIRE(is_perfect_dominating(g, s) == oracle::perfect_dominating(adj, to_oracle(s)));
            }
        }
}

TEST_CASE("gamma <= gamma_p over all graphs up to n = 7")
{
    for (int n = 1 ; n <= 7 ; ++n)
        for (auto & g : graphs_up_to_isomorphism(n)) {
            auto d = domination_numbers(g);
            REQUIRE(d.gamma >= 1);
            REQUIRE(d.gamma <= d.gamma_p);
        }
}

TEST_CASE("neighbour counts")
{
    auto g = cycle(6);
    auto counts = neighbour_counts(g, VertexSet::of({0, 2}));
    CHECK(counts.at_least_one == VertexSet::of({1, 3, 5}));
    CHECK(counts.at_least_two == VertexSet::of({1}));

    auto a = neighbour_counts(g, VertexSet::of({0}));
    auto b = neighbour_counts(g, VertexSet::of({2}));
    auto m = a.merged(b);
    CHECK(m.at_least_one == counts.at_least_one);
    CHECK(m.at_least_two == counts.at_least_two);
}
