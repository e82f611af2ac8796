/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_DOMINATION_HH
#define PRC_DOMINATION_HH 1

#include <prc/graph.hh>

#include <vector>

namespace prc
{
    /**
     * How often each vertex is hit by the open neighbourhoods of a set:
     * at_least_one holds the vertices with one or more neighbours in the
     * set, at_least_two those with two or more.
     */
    struct NeighbourCounts
    {
        VertexSet at_least_one;
        VertexSet at_least_two;

        auto add(VertexSet neighbours) -> void
        {
            at_least_two |= at_least_one & neighbours;
            at_least_one |= neighbours;
        }

        auto merged(const NeighbourCounts & other) const -> NeighbourCounts
        {
            return NeighbourCounts{
                at_least_one | other.at_least_one,
                at_least_two | other.at_least_two | (at_least_one & other.at_least_one)};
        }
    };

    auto neighbour_counts(const Graph & g, VertexSet s) -> NeighbourCounts;

    auto is_dominating(const Graph & g, VertexSet s) -> bool;
    auto is_perfect_dominating(const Graph & g, VertexSet s) -> bool;

    struct DominationNumbers
    {
        int gamma = 0;
        int gamma_p = 0;
    };

    auto domination_numbers(const Graph & g) -> DominationNumbers;

    /// All perfect dominating sets with exactly k vertices, ascending by mask value.
    auto enumerate_perfect_dominating_sets(const Graph & g, int k) -> std::vector<VertexSet>;
}

#endif
