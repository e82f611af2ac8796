/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_TESTS_SUPPORT_HH
#define PRC_TESTS_SUPPORT_HH 1

#include "oracle.hh"

#include <prc/graph.hh>
#include <prc/vertex_set.hh>

#include <vector>

namespace test_support
{
    inline auto to_oracle(const prc::Graph & g) -> oracle::Adjacency
    {
        return oracle::adjacency(g.order(), g.edges());
    }

    inline auto to_oracle(prc::VertexSet s) -> oracle::Set
    {
        oracle::Set result;
        for (int v : s)
            result.insert(v);
        return result;
    }

    /// One-based labels v_1..v_n map to indices 0..n-1.
    inline auto v(std::initializer_list<int> one_based) -> prc::VertexSet
    {
        prc::VertexSet s;
        for (int x : one_based)
            s.insert(x - 1);
        return s;
    }

    inline auto path(int n) -> prc::Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.emplace_back(i, i + 1);
        return prc::build_graph(n, edges);
    }

    inline auto cycle(int n) -> prc::Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return prc::build_graph(n, edges);
    }

    inline auto complete(int n) -> prc::Graph
    {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0 ; i < n ; ++i)
            for (int j = i + 1 ; j < n ; ++j)
                edges.emplace_back(i, j);
        return prc::build_graph(n, edges);
    }
}

#endif
