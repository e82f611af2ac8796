/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_SET_PARTITIONS_HH
#define PRC_SET_PARTITIONS_HH 1

#include <prc/coalition.hh>

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace prc
{
    /**
     * Visit every restricted growth string of length n in lexicographic
     * order: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]). Each string encodes
     * one set partition of {0..n-1}; the callback receives the string and
     * its block count. For n = 0 the single empty string is visited.
     */
    template <typename Visitor_>
    auto for_each_restricted_growth_string(int n, Visitor_ && visit) -> void
    {
        std::vector<int> rgs(n, 0), prefix_max(n, 0);
        if (0 == n) {
            visit(std::span<const int>{rgs}, 0);
            return;
        }

        while (true) {
            visit(std::span<const int>{rgs}, prefix_max[n - 1] + 1);

            int i = n - 1;
            while (i > 0 && rgs[i] == prefix_max[i - 1] + 1)
                --i;
            if (0 == i)
                return;

            ++rgs[i];
            prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
            for (int j = i + 1 ; j < n ; ++j) {
                rgs[j] = 0;
                prefix_max[j] = prefix_max[i];
            }
        }
    }

    auto partition_from_rgs(std::span<const int> rgs, int block_count) -> Partition;

    /// Inverse of partition_from_rgs for a well-formed partition: blocks are
    /// renumbered in order of their smallest vertex.
    auto rgs_from_partition(const Partition & p, int n) -> std::vector<int>;

    auto bell_number(int n) -> std::uint64_t;
}

#endif
