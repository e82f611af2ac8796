/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/solver.hh>
#include <prc/domination.hh>
#include <prc/errors.hh>
#include <prc/set_partitions.hh>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

using namespace prc;

using std::atomic;
using std::optional;
using std::vector;

using std::chrono::duration_cast;
using std::chrono::microseconds;
using std::chrono::steady_clock;

namespace
{
    auto check_order(const Graph & g, int limit, const char * what) -> void
    {
        if (g.order() > limit)
            throw Error(ErrorKind::TooLarge, std::string{what} + " accepts at most " + std::to_string(limit)
                    + " vertices, got " + std::to_string(g.order()));
    }

    auto certificate_for(const Graph & g, std::span<const int> rgs, int block_count) -> PrcCertificate
    {
        auto result = validate_prc_partition(g, partition_from_rgs(rgs, block_count));
        return std::get<PrcCertificate>(result);
    }

    struct Block
    {
        VertexSet members;
        NeighbourCounts counts;
    };

    /**
     * Depth-first search assigning vertices 0..n-1 in order to existing
     * blocks (ascending) or to one new block. Every block only grows along a
     * branch, which is what makes the dead-block rules sound.
     */
    class Search
    {
        private:
            const Graph & _graph;
            const int _n;
            const VertexSet _all;
            const atomic<int> * const _shared_best;

            vector<Block> _blocks;
            int _used = 0;
            vector<int> _rgs;
            VertexSet _assigned;

            int _best = 0;
            vector<int> _best_rgs;

        public:
            SearchStats stats;

            Search(const Graph & g, const atomic<int> * shared_best) :
                _graph(g),
                _n(g.order()),
                _all(g.vertices()),
                _shared_best(shared_best),
                _blocks(g.order()),
                _rgs(g.order(), -1)
            {
            }

            auto best() const -> int { return _best; }
            auto best_rgs() const -> const vector<int> & { return _best_rgs; }

            /// Place the given prefix, then search below it. Returns false if
            /// the prefix itself is already dead.
            auto run(std::span<const int> prefix) -> void
            {
                for (std::size_t v = 0 ; v < prefix.size() ; ++v)
                    if (! place(static_cast<int>(v), prefix[v]))
                        return;
                expand(static_cast<int>(prefix.size()));
            }

        private:
            auto bounded_out(int bound) const -> bool
            {
                if (bound <= _best)
                    return true;
                return _shared_best && bound < _shared_best->load(std::memory_order_relaxed);
            }

            auto place(int v, int b) -> bool
            {
                auto & block = _blocks[b];
                block.members.insert(v);
                block.counts.add(_graph.neighbours(v));
                _assigned.insert(v);
                _rgs[v] = b;
                if (b == _used)
                    ++_used;
                return viable(v, b);
            }

            auto unplace(int v, int b, const Block & saved) -> void
            {
                _blocks[b] = saved;
                _assigned.erase(v);
                _rgs[v] = -1;
                if (_blocks[b].members.empty())
                    --_used;
            }

            auto viable(int v, int b) const -> bool
            {
                auto & block = _blocks[b];

                // a dominating block of two or more vertices can take neither role
                if (block.members.size() >= 2 && (block.members | block.counts.at_least_one) == _all)
                    return false;

                // an assigned outsider with two neighbours inside kills the block for good
                if (block.counts.at_least_two.intersects(_assigned - block.members))
                    return false;

                for (int c = 0 ; c < _used ; ++c)
                    if (c != b && _blocks[c].counts.at_least_two.contains(v))
                        return false;

                return true;
            }

            auto leaf_is_valid() const -> bool
            {
                for (int i = 0 ; i < _used ; ++i) {
                    auto & a = _blocks[i];
                    if ((a.members | a.counts.at_least_one) == _all)
                        continue;

                    bool partnered = false;
                    for (int j = 0 ; j < _used && ! partnered ; ++j) {
                        if (j == i)
                            continue;
                        auto & b = _blocks[j];
                        if ((b.members | b.counts.at_least_one) == _all)
                            continue;
                        auto merged = a.counts.merged(b.counts);
                        VertexSet outside = _all - (a.members | b.members);
                        partnered = outside.subset_of(merged.at_least_one) && ! outside.intersects(merged.at_least_two);
                    }
                    if (! partnered)
                        return false;
                }
                return true;
            }

            auto expand(int v) -> void
            {
                ++stats.nodes;

                if (bounded_out(_used + (_n - v)))
                    return;

                if (v == _n) {
                    ++stats.partitions_tested;
                    if (leaf_is_valid()) {
                        _best = _used;
                        _best_rgs = _rgs;
                    }
                    return;
                }

                int choices = std::min(_used + 1, _n);
                for (int b = 0 ; b < choices ; ++b) {
                    Block saved = _blocks[b];
                    if (place(v, b))
                        expand(v + 1);
                    unplace(v, b, saved);
                    if (bounded_out(_used + (_n - v)))
                        return;
                }
            }
    };

    /// Restricted growth prefixes of the given length, in lexicographic order.
    auto prefixes(int length) -> vector<vector<int>>
    {
        vector<vector<int>> result;
        for_each_restricted_growth_string(length, [&] (std::span<const int> rgs, int) {
            result.emplace_back(rgs.begin(), rgs.end());
        });
        return result;
    }
}

auto prc::prc_bruteforce(const Graph & g) -> SolveResult
{
    check_order(g, bruteforce_max_order, "prc_bruteforce");
    auto start = steady_clock::now();

    SolveResult result;
    for_each_restricted_growth_string(g.order(), [&] (std::span<const int> rgs, int block_count) {
        ++result.stats.partitions_tested;
        ++result.stats.nodes;
        if (block_count <= result.prc)
            return;
        auto validation = validate_prc_partition(g, partition_from_rgs(rgs, block_count));
        if (auto certificate = std::get_if<PrcCertificate>(&validation)) {
            result.prc = block_count;
            result.certificate = *certificate;
        }
    });

    result.stats.wall_time = duration_cast<microseconds>(steady_clock::now() - start);
    return result;
}

auto prc::prc_solve(const Graph & g, const SolveOptions & options) -> SolveResult
{
    check_order(g, solve_max_order, "prc_solve");
    auto start = steady_clock::now();

    SolveResult result;
    int n = g.order();

    if (options.workers <= 1 || n < 6) {
        Search search{g, nullptr};
        search.run({});
        result.stats = search.stats;
        if (search.best() > 0) {
            result.prc = search.best();
            result.certificate = certificate_for(g, search.best_rgs(), search.best());
        }
    }
    else {
        auto tasks = prefixes(std::min(n, 6));
        atomic<int> shared_best{0};
        atomic<std::size_t> next_task{0};
        vector<int> task_best(tasks.size(), 0);
        vector<vector<int>> task_rgs(tasks.size());
        std::mutex stats_mutex;

        auto worker = [&] () {
            SearchStats local;
            while (true) {
                std::size_t t = next_task.fetch_add(1);
                if (t >= tasks.size())
                    break;
                Search search{g, &shared_best};
                search.run(tasks[t]);
                local.nodes += search.stats.nodes;
                local.partitions_tested += search.stats.partitions_tested;
                task_best[t] = search.best();
                task_rgs[t] = search.best_rgs();
                int seen = shared_best.load();
                while (search.best() > seen && ! shared_best.compare_exchange_weak(seen, search.best()))
                    ;
            }
            std::lock_guard<std::mutex> lock{stats_mutex};
            result.stats.nodes += local.nodes;
            result.stats.partitions_tested += local.partitions_tested;
        };

        vector<std::thread> threads;
        for (int w = 0 ; w < options.workers ; ++w)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();

        // tasks are in lexicographic prefix order, so the first task reaching
        // the maximum holds the smallest string
        int best = *std::max_element(task_best.begin(), task_best.end());
        if (best > 0) {
            auto winner = std::find(task_best.begin(), task_best.end(), best) - task_best.begin();
            result.prc = best;
            result.certificate = certificate_for(g, task_rgs[winner], best);
        }
    }

    result.stats.wall_time = duration_cast<microseconds>(steady_clock::now() - start);
    return result;
}

auto prc::coalition_number_bruteforce(const Graph & g) -> int
{
    check_order(g, coalition_number_max_order, "coalition_number_bruteforce");

    int best = 0;
    for_each_restricted_growth_string(g.order(), [&] (std::span<const int> rgs, int block_count) {
        if (block_count <= best)
            return;
        auto p = partition_from_rgs(rgs, block_count);
        for (int i = 0 ; i < block_count ; ++i) {
            bool dominating = is_dominating(g, p.blocks[i]);
            if (dominating && p.blocks[i].size() == 1)
                continue;
            if (dominating)
                return;
            bool partnered = false;
            for (int j = 0 ; j < block_count && ! partnered ; ++j)
                partnered = (j != i) && is_coalition(g, p.blocks[i], p.blocks[j]);
            if (! partnered)
                return;
        }
        best = block_count;
    });
    return best;
}

auto prc::verify_certificate(const Graph & g, const PrcCertificate & certificate) -> bool
{
    auto & p = certificate.partition;
    if (! is_partition_of(g, p) || certificate.roles.size() != p.blocks.size())
        return false;

    for (int i = 0 ; i < p.size() ; ++i) {
        auto & block = p.blocks[i];
        if (std::holds_alternative<SingletonDominating>(certificate.roles[i])) {
            if (block.size() != 1 || ! is_dominating(g, block))
                return false;
        }
        else {
            int j = std::get<Partner>(certificate.roles[i]).block;
            if (j < 0 || j >= p.size() || j == i || ! is_perfect_coalition(g, block, p.blocks[j]))
                return false;
        }
    }
    return true;
}
