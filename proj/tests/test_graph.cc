/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "support.hh"

#include <prc/errors.hh>
#include <prc/graph.hh>

#include <doctest.h>

#include <random>
#include <sstream>

using namespace prc;
using namespace test_support;

TEST_CASE("build_graph basics")
{
    auto p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.order() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);

    auto k1 = build_graph(1, {});
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    auto p3 = build_graph(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(p3.edge_count() == 2);
    CHECK(p3 == path(3));

    CHECK(p4.closed_neighbours(1) == VertexSet::of({0, 1, 2}));
    CHECK(p4.adjacent(2, 3));
    CHECK(! p4.adjacent(0, 3));
}

TEST_CASE("build_graph errors")
{
    auto kind_of = [] (auto f) {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("expected an error");
        return ErrorKind::BadParams;
    };
    CHECK(kind_of([] { build_graph(3, {{0, 3}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { build_graph(3, {{-1, 2}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { build_graph(3, {{1, 1}}); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { build_graph(65, {}); }) == ErrorKind::UnsupportedSize);
    CHECK_NOTHROW(build_graph(64, {{0, 63}}));
}

TEST_CASE("graph6 hand-encoded records")
{
    // P_3: n=3 gives byte 'B'; bits (0,1)=1 (0,2)=0 (1,2)=1 padded to 101000 = 40, 40+63 = 'g'.
    CHECK(parse_graph6("Bg") == path(3));
    // K_4: six ones gives 111111 = 63, 63+63 = '~'.
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(parse_graph6("@") == build_graph(1, {}));
    CHECK(encode_graph6(build_graph(1, {})) == "@");
    CHECK(encode_graph6(path(3)) == "Bg");
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(parse_graph6(">>graph6<<Bg\n") == path(3));
    CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("graph6 round trip, exhaustive to n = 6")
{
    for (int n = 0 ; n <= 6 ; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << pairs) ; ++mask) {
            auto g = graph_from_edge_mask(n, mask);
            REQUIRE(parse_graph6(encode_graph6(g)) == g);
        }
    }
}

TEST_CASE("graph6 round trip, random larger graphs")
{
    std::mt19937_64 rng{7};
    for (int trial = 0 ; trial < 300 ; ++trial) {
        int n = std::uniform_int_distribution<int>{7, 62}(rng);
        std::bernoulli_distribution edge{std::uniform_real_distribution<double>{0.05, 0.95}(rng)};
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                if (edge(rng))
                    edges.emplace_back(i, j);
        auto g = build_graph(n, edges);
        auto text = encode_graph6(g);
        REQUIRE(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 long-form orders")
{
    CHECK_THROWS_AS(encode_graph6(complete(63)), Error);

    // n=63: '~' then 63 as three 6-bit groups "??~"; 1953 adjacency bits are
    // 325 full bytes plus 111000 = 56, i.e. 'w'.
    CHECK(parse_graph6("~??~" + std::string(325, '~') + "w") == complete(63));
    // n=64: "~?@?" and 2016 bits, exactly 336 bytes.
    CHECK(parse_graph6("~?@?" + std::string(336, '~')) == complete(64));
    CHECK_THROWS_AS(parse_graph6("~?@?"), Error);
}

TEST_CASE("graph6 malformed records")
{
    auto kind_of = [] (std::string_view s) {
        try {
            parse_graph6(s);
        }
        catch (const Error & e) {
            return e.kind();
        }
        return ErrorKind::BadParams;
    };
    CHECK(kind_of("") == ErrorKind::MalformedRecord);
    CHECK(kind_of("B") == ErrorKind::MalformedRecord);
    CHECK(kind_of("Bgg") == ErrorKind::MalformedRecord);
    CHECK(kind_of("B!") == ErrorKind::MalformedRecord);
    CHECK(kind_of("Bh") == ErrorKind::MalformedRecord);
    CHECK(kind_of("~?A?") == ErrorKind::UnsupportedSize);
}

TEST_CASE("edge list io")
{
    std::istringstream in{"4 3\n0 1\n1 2\n2 3\n"};
    auto g = parse_edge_list(in);
    CHECK(g == path(4));

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream again{out.str()};
    CHECK(parse_edge_list(again) == g);

    std::istringstream bad{"3 2\n0 1\n"};
    CHECK_THROWS_AS(parse_edge_list(bad), Error);
    std::istringstream loop{"3 1\n2 2\n"};
    CHECK_THROWS_AS(parse_edge_list(loop), Error);
}

TEST_CASE("structure reports")
{
    auto p4 = structure_report(path(4));
    CHECK(p4.min_degree == 1);
    CHECK(p4.max_degree == 2);
    CHECK(p4.connected);
    CHECK(p4.triangle_free);
    CHECK(! p4.girth);
    CHECK(p4.leaves == VertexSet::of({0, 3}));
    CHECK(p4.support_vertices == VertexSet::of({1, 2}));

    auto c5 = structure_report(cycle(5));
    CHECK(c5.min_degree == 2);
    CHECK(c5.max_degree == 2);
    CHECK(c5.girth == 5);
    CHECK(c5.triangle_free);

    auto k4 = structure_report(complete(4));
    CHECK(k4.min_degree == 3);
    CHECK(k4.max_degree == 3);
    CHECK(k4.girth == 3);
    CHECK(! k4.triangle_free);

    CHECK(! is_connected(build_graph(4, {{0, 1}, {2, 3}})));
    CHECK(component_of(build_graph(4, {{0, 1}, {2, 3}}), 3) == VertexSet::of({2, 3}));
}

TEST_CASE("girth")
{
    for (int n = 3 ; n <= 20 ; ++n) {
        CHECK(girth(cycle(n)) == n);
        CHECK(! girth(path(n)));
    }
    CHECK(girth(parse_graph6("IheA@GUAo")) == 5);
    // Two disjoint cycles: the shorter one wins.
    CHECK(girth(build_graph(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {6, 7}, {7, 8}, {8, 5}})) == 4);
    // A 4-cycle with a pendant path hanging off it.
    CHECK(girth(build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}})) == 4);
}
