/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/domination.hh>
#include <prc/errors.hh>

using namespace prc;

using std::vector;

namespace
{
    template <typename Predicate_>
    auto for_each_subset_of_size(int n, int k, Predicate_ && visit) -> void
    {
        if (k < 0 || k > n)
            return;
        if (0 == k) {
            visit(VertexSet{});
            return;
        }
        std::uint64_t mask = VertexSet::first(k).bits();
        do {
            if (! visit(VertexSet{mask}))
                return;
        } while (next_combination(mask, n));
    }

    auto smallest_size(const Graph & g, bool (* accept)(const Graph &, VertexSet)) -> int
    {
        for (int k = 0 ; k <= g.order() ; ++k) {
            bool found = false;
            for_each_subset_of_size(g.order(), k, [&] (VertexSet s) {
                found = accept(g, s);
                return ! found;
            });
            if (found)
                return k;
        }
        return g.order();
    }
}

auto prc::neighbour_counts(const Graph & g, VertexSet s) -> NeighbourCounts
{
    NeighbourCounts counts;
    for (int v : s)
        counts.add(g.neighbours(v));
    return counts;
}

auto prc::is_dominating(const Graph & g, VertexSet s) -> bool
{
    return (s | neighbour_counts(g, s).at_least_one) == g.vertices();
}

auto prc::is_perfect_dominating(const Graph & g, VertexSet s) -> bool
{
    auto counts = neighbour_counts(g, s);
    VertexSet outside = g.vertices() - s;
    return outside.subset_of(counts.at_least_one) && ! outside.intersects(counts.at_least_two);
}

auto prc::domination_numbers(const Graph & g) -> DominationNumbers
{
    if (g.order() < 1)
        throw Error(ErrorKind::BadParams, "domination numbers need at least one vertex");
    return DominationNumbers{
        smallest_size(g, is_dominating),
        smallest_size(g, is_perfect_dominating)};
}

auto prc::enumerate_perfect_dominating_sets(const Graph & g, int k) -> vector<VertexSet>
{
    if (k < 0 || k > g.order())
        throw Error(ErrorKind::BadParams, "set size " + std::to_string(k) + " outside 0.." + std::to_string(g.order()));

    vector<VertexSet> result;
    for_each_subset_of_size(g.order(), k, [&] (VertexSet s) {
        if (is_perfect_dominating(g, s))
            result.push_back(s);
        return true;
    });
    return result;
}
