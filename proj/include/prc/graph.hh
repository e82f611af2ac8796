/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_GRAPH_HH
#define PRC_GRAPH_HH 1

#include <prc/vertex_set.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prc
{
    /**
     * Immutable simple undirected graph on vertices 0..n-1, stored as one
     * neighbourhood bit mask per vertex. Built through build_graph or one of
     * the parsers, which enforce symmetry and the absence of loops.
     */
    class Graph
    {
        private:
            int _n = 0;
            int _edge_count = 0;
            std::vector<VertexSet> _adj;

            Graph(int n, std::vector<VertexSet> adj);

            friend auto build_graph(int, const std::vector<std::pair<int, int>> &) -> Graph;

        public:
            Graph() = default;

            auto order() const -> int { return _n; }
            auto edge_count() const -> int { return _edge_count; }

            auto vertices() const -> VertexSet { return VertexSet::first(_n); }

            auto neighbours(int v) const -> VertexSet { return _adj[v]; }
            auto closed_neighbours(int v) const -> VertexSet { return _adj[v] | VertexSet::singleton(v); }
            auto degree(int v) const -> int { return _adj[v].size(); }
            auto adjacent(int u, int v) const -> bool { return _adj[u].contains(v); }

            auto min_degree() const -> int;
            auto max_degree() const -> int;

            /// Edges as (u, v) pairs with u < v, in lexicographic order.
            auto edges() const -> std::vector<std::pair<int, int>>;

            auto operator== (const Graph &) const -> bool = default;
    };

    auto build_graph(int n, const std::vector<std::pair<int, int>> & edges) -> Graph;

    /// Graph whose edge set is selected by the bits of mask, indexed over the
    /// pairs (0,1), (0,2), (1,2), (0,3), ... in graph6 column order.
    auto graph_from_edge_mask(int n, std::uint64_t mask) -> Graph;

    auto parse_graph6(std::string_view line) -> Graph;
    auto encode_graph6(const Graph & g) -> std::string;

    /// Plain edge list: a header line "n m" followed by m lines "u v".
    auto parse_edge_list(std::istream & in) -> Graph;
    auto write_edge_list(std::ostream & out, const Graph & g) -> void;

    struct StructureReport
    {
        int min_degree = 0;
        int max_degree = 0;
        bool connected = true;
        bool triangle_free = true;
        std::optional<int> girth;
        VertexSet leaves;
        VertexSet support_vertices;
    };

    auto structure_report(const Graph & g) -> StructureReport;

    auto is_connected(const Graph & g) -> bool;
    auto girth(const Graph & g) -> std::optional<int>;
    auto is_triangle_free(const Graph & g) -> bool;

    /// Vertex set of the connected component containing v.
    auto component_of(const Graph & g, int v) -> VertexSet;
}

#endif
