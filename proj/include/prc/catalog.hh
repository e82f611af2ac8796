/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_CATALOG_HH
#define PRC_CATALOG_HH 1

#include <prc/graph.hh>

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace prc
{
    inline constexpr int catalog_max_order = 7;

    /**
     * Isomorphism-invariant code of a small graph: the smallest upper-triangle
     * edge mask over all relabellings that list vertices by non-increasing
     * degree. Equal codes iff isomorphic. Order at most catalog_max_order + 1.
     */
    auto canonical_code(const Graph & g) -> std::uint64_t;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    /// One representative per isomorphism class of graphs on n vertices,
    /// ordered by canonical code. n at most catalog_max_order.
    auto graphs_up_to_isomorphism(int n) -> const std::vector<Graph> &;

    /// Free trees on 1..9 vertices as graph6, grouped by order.
    auto free_tree_graph6_records() -> std::span<const std::string_view>;
    auto free_trees() -> std::vector<Graph>;
}

#endif
