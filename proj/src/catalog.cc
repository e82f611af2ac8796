/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/catalog.hh>
#include <prc/errors.hh>

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>

using namespace prc;

using std::uint64_t;
using std::vector;

namespace
{
    auto code_under(const Graph & g, const vector<int> & order) -> uint64_t
    {
        // bit order: (0,1), (0,2), (1,2), (0,3), ... most significant first
        uint64_t code = 0;
        int n = g.order();
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i)
                code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
        return code;
    }

    /// Try every ordering that permutes vertices only within equal-degree cells.
    auto minimise(const Graph & g, vector<int> & order, const vector<std::pair<int, int>> & cells,
            std::size_t cell, uint64_t & best) -> void
    {
        if (cell == cells.size()) {
            best = std::min(best, code_under(g, order));
            return;
        }
        auto [begin, end] = cells[cell];
        std::sort(order.begin() + begin, order.begin() + end);
        do {
            minimise(g, order, cells, cell + 1, best);
        } while (std::next_permutation(order.begin() + begin, order.begin() + end));
    }
}

auto prc::canonical_code(const Graph & g) -> uint64_t
{
    int n = g.order();
    if (n > catalog_max_order + 1)
        throw Error(ErrorKind::TooLarge, "canonical codes are limited to " + std::to_string(catalog_max_order + 1) + " vertices");

    vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

    vector<std::pair<int, int>> cells;
    for (int i = 0 ; i < n ; ) {
        int j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i]))
            ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    uint64_t best = ~uint64_t{0};
    minimise(g, order, cells, 0, best);
    return 0 == n ? 0 : best;
}

auto prc::are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

auto prc::graphs_up_to_isomorphism(int n) -> const vector<Graph> &
{
    if (n < 0 || n > catalog_max_order)
        throw Error(ErrorKind::TooLarge, "graph catalogue covers orders 0.." + std::to_string(catalog_max_order));

    static std::mutex mutex;
    static std::array<vector<Graph>, catalog_max_order + 1> cache;
    static std::array<bool, catalog_max_order + 1> ready{};

    std::lock_guard<std::mutex> lock{mutex};
    for (int k = 0 ; k <= n ; ++k) {
        if (ready[k])
            continue;
        std::map<uint64_t, Graph> classes;
        if (0 == k)
            classes.emplace(0, build_graph(0, {}));
        else
            for (auto & smaller : cache[k - 1]) {
                auto base = smaller.edges();
                // every neighbourhood for the new vertex k-1
                for (uint64_t mask = 0 ; mask < (uint64_t{1} << (k - 1)) ; ++mask) {
                    auto edges = base;
                    for (int v = 0 ; v < k - 1 ; ++v)
                        if ((mask >> v) & 1)
                            edges.emplace_back(v, k - 1);
                    auto g = build_graph(k, edges);
                    classes.try_emplace(canonical_code(g), g);
                }
            }
        for (auto & [code, g] : classes)
            cache[k].push_back(g);
        ready[k] = true;
    }
    return cache[n];
}

auto prc::free_trees() -> vector<Graph>
{
    vector<Graph> result;
    for (auto record : free_tree_graph6_records())
        result.push_back(parse_graph6(record));
    return result;
}
