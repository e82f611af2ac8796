/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_TESTS_ORACLE_HH
#define PRC_TESTS_ORACLE_HH 1

// Slow, literal implementations of the definitions over std::set, used only
// to cross-check the bit-mask library. Nothing here includes library code
// beyond plain edge lists.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{
    using Set = std::set<int>;
    using Adjacency = std::vector<Set>;

    inline auto adjacency(int n, const std::vector<std::pair<int, int>> & edges) -> Adjacency
    {
        Adjacency adj(n);
        for (auto & [u, v] : edges) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        return adj;
    }

    inline auto neighbours_in(const Adjacency & adj, int v, const Set & s) -> int
    {
        int count = 0;
        for (int u : adj[v])
            count += s.count(u);
        return count;
    }

    inline auto dominating(const Adjacency & adj, const Set & s) -> bool
    {
        for (int v = 0 ; v < int(adj.size()) ; ++v)
            if (! s.count(v) && neighbours_in(adj, v, s) == 0)
                return false;
        return true;
    }

    inline auto perfect_dominating(const Adjacency & adj, const Set & s) -> bool
    {
        for (int v = 0 ; v < int(adj.size()) ; ++v)
            if (! s.count(v) && neighbours_in(adj, v, s) != 1)
                return false;
        return true;
    }

    inline auto at_most_one_outside(const Adjacency & adj, const Set & s) -> bool
    {
        for (int v = 0 ; v < int(adj.size()) ; ++v)
            if (! s.count(v) && neighbours_in(adj, v, s) > 1)
                return false;
        return true;
    }

    inline auto set_union(const Set & a, const Set & b) -> Set
    {
        Set u = a;
        u.insert(b.begin(), b.end());
        return u;
    }

    inline auto perfect_coalition(const Adjacency & adj, const Set & a, const Set & b) -> bool
    {
        return ! dominating(adj, a) && ! dominating(adj, b)
            && at_most_one_outside(adj, a) && at_most_one_outside(adj, b)
            && perfect_dominating(adj, set_union(a, b));
    }

    inline auto coalition(const Adjacency & adj, const Set & a, const Set & b) -> bool
    {
        return ! dominating(adj, a) && ! dominating(adj, b) && dominating(adj, set_union(a, b));
    }

    inline auto prc_partition(const Adjacency & adj, const std::vector<Set> & blocks) -> bool
    {
        for (std::size_t i = 0 ; i < blocks.size() ; ++i) {
            if (blocks[i].size() == 1 && dominating(adj, blocks[i]))
                continue;
            bool partnered = false;
            for (std::size_t j = 0 ; j < blocks.size() ; ++j)
                if (j != i && perfect_coalition(adj, blocks[i], blocks[j]))
                    partnered = true;
            if (! partnered)
                return false;
        }
        return true;
    }

    inline auto c_partition(const Adjacency & adj, const std::vector<Set> & blocks) -> bool
    {
        for (std::size_t i = 0 ; i < blocks.size() ; ++i) {
            bool dom = dominating(adj, blocks[i]);
            if (dom && blocks[i].size() == 1)
                continue;
            if (dom)
                return false;
            bool partnered = false;
            for (std::size_t j = 0 ; j < blocks.size() ; ++j)
                if (j != i && coalition(adj, blocks[i], blocks[j]))
                    partnered = true;
            if (! partnered)
                return false;
        }
        return true;
    }

    /// All set partitions of the given elements: the smallest remaining
    /// element picks every subset of the rest as its block companions.
    inline auto for_each_partition(const std::vector<int> & elements,
            const std::function<void (const std::vector<Set> &)> & visit) -> void
    {
        std::vector<Set> blocks;
        std::function<void (std::vector<int>)> recurse = [&] (std::vector<int> rest) {
            if (rest.empty()) {
                visit(blocks);
                return;
            }
            int head = rest.front();
            std::vector<int> others(rest.begin() + 1, rest.end());
            for (unsigned long mask = 0 ; mask < (1ul << others.size()) ; ++mask) {
                Set block{head};
                std::vector<int> remaining;
                for (std::size_t i = 0 ; i < others.size() ; ++i)
                    if ((mask >> i) & 1)
                        block.insert(others[i]);
                    else
                        remaining.push_back(others[i]);
                blocks.push_back(block);
                recurse(remaining);
                blocks.pop_back();
            }
        };
        recurse(elements);
    }

    inline auto all_vertices(const Adjacency & adj) -> std::vector<int>
    {
        std::vector<int> v(adj.size());
        for (int i = 0 ; i < int(adj.size()) ; ++i)
            v[i] = i;
        return v;
    }

    inline auto prc_number(const Adjacency & adj) -> int
    {
        int best = 0;
        for_each_partition(all_vertices(adj), [&] (const std::vector<Set> & blocks) {
            if (int(blocks.size()) > best && prc_partition(adj, blocks))
                best = int(blocks.size());
        });
        return best;
    }

    inline auto coalition_number(const Adjacency & adj) -> int
    {
        int best = 0;
        for_each_partition(all_vertices(adj), [&] (const std::vector<Set> & blocks) {
            if (int(blocks.size()) > best && c_partition(adj, blocks))
                best = int(blocks.size());
        });
        return best;
    }

    /// Every subset of {0..n-1} that is perfect dominating, filtered by size.
    inline auto perfect_dominating_sets(const Adjacency & adj, int k) -> std::vector<Set>
    {
        std::vector<Set> result;
        int n = int(adj.size());
        for (unsigned long mask = 0 ; mask < (1ul << n) ; ++mask) {
            Set s;
            for (int v = 0 ; v < n ; ++v)
                if ((mask >> v) & 1)
                    s.insert(v);
            if (int(s.size()) == k && perfect_dominating(adj, s))
                result.push_back(s);
        }
        return result;
    }

    inline auto count_partitions(int n) -> long
    {
        long count = 0;
        std::vector<int> v(n);
        for (int i = 0 ; i < n ; ++i)
            v[i] = i;
        for_each_partition(v, [&] (const std::vector<Set> &) { ++count; });
        return count;
    }
}

#endif
