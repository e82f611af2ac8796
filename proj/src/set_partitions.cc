/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/set_partitions.hh>
#include <prc/errors.hh>

#include <algorithm>

using namespace prc;

using std::vector;

auto prc::partition_from_rgs(std::span<const int> rgs, int block_count) -> Partition
{
    Partition p;
    p.blocks.resize(block_count);
    for (std::size_t v = 0 ; v < rgs.size() ; ++v)
        p.blocks[rgs[v]].insert(static_cast<int>(v));
    return p;
}

auto prc::rgs_from_partition(const Partition & p, int n) -> vector<int>
{
    vector<VertexSet> blocks = p.blocks;
    std::sort(blocks.begin(), blocks.end(), [] (VertexSet a, VertexSet b) { return a.front() < b.front(); });

    vector<int> rgs(n, -1);
    for (std::size_t i = 0 ; i < blocks.size() ; ++i)
        for (int v : blocks[i])
            rgs[v] = static_cast<int>(i);
    return rgs;
}

auto prc::bell_number(int n) -> std::uint64_t
{
    if (n < 0 || n > 25)
        throw Error(ErrorKind::BadParams, "Bell number index " + std::to_string(n) + " outside 0..25");

    // Bell triangle
    vector<std::uint64_t> row{1};
    for (int i = 0 ; i < n ; ++i) {
        vector<std::uint64_t> next{row.back()};
        for (auto x : row)
            next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}
