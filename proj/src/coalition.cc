/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <prc/coalition.hh>
#include <prc/domination.hh>
#include <prc/errors.hh>

using namespace prc;

using std::string;

namespace
{
    auto check_pair(VertexSet a, VertexSet b) -> void
    {
        if (a.empty() || b.empty())
            throw Error(ErrorKind::EmptySet, "coalition members must be nonempty");
        if (a.intersects(b))
            throw Error(ErrorKind::OverlappingSets, "coalition members must be disjoint");
    }
}

auto prc::to_string(ViolationKind kind) -> string
{
    switch (kind) {
        case ViolationKind::NotAPartition:               return "NotAPartition";
        case ViolationKind::EmptyBlock:                  return "EmptyBlock";
        case ViolationKind::NonSingletonDominatingBlock: return "NonSingletonDominatingBlock";
        case ViolationKind::NoPartnerForBlock:           return "NoPartnerForBlock";
    }
    return "Unknown";
}

auto prc::singleton_partition(const Graph & g) -> Partition
{
    Partition p;
    for (int v = 0 ; v < g.order() ; ++v)
        p.blocks.push_back(VertexSet::singleton(v));
    return p;
}

auto prc::is_partition_of(const Graph & g, const Partition & p) -> bool
{
    VertexSet seen;
    for (auto & b : p.blocks) {
        if (b.empty() || b.intersects(seen))
            return false;
        seen |= b;
    }
    return seen == g.vertices();
}

auto prc::satisfies_sparse_neighbor_condition(const Graph & g, VertexSet s) -> bool
{
    return ! (g.vertices() - s).intersects(neighbour_counts(g, s).at_least_two);
}

auto prc::is_perfect_coalition(const Graph & g, VertexSet a, VertexSet b) -> bool
{
    check_pair(a, b);
    return ! is_dominating(g, a) && ! is_dominating(g, b)
        && satisfies_sparse_neighbor_condition(g, a)
        && satisfies_sparse_neighbor_condition(g, b)
        && is_perfect_dominating(g, a | b);
}

auto prc::is_coalition(const Graph & g, VertexSet a, VertexSet b) -> bool
{
    check_pair(a, b);
    return ! is_dominating(g, a) && ! is_dominating(g, b) && is_dominating(g, a | b);
}

auto prc::validate_prc_partition(const Graph & g, const Partition & p) -> ValidationResult
{
    VertexSet seen;
    for (int i = 0 ; i < p.size() ; ++i) {
        auto & b = p.blocks[i];
        if (b.empty())
            return Violation{ViolationKind::EmptyBlock, i};
        if (b.intersects(seen) || ! b.subset_of(g.vertices()))
            return Violation{ViolationKind::NotAPartition, i};
        seen |= b;
    }
    if (seen != g.vertices())
        return Violation{ViolationKind::NotAPartition, std::nullopt};

    PrcCertificate certificate{p, {}};
    for (int i = 0 ; i < p.size() ; ++i) {
        auto & b = p.blocks[i];
        if (is_dominating(g, b)) {
            if (b.size() == 1) {
                certificate.roles.emplace_back(SingletonDominating{});
                continue;
            }
            return Violation{ViolationKind::NonSingletonDominatingBlock, i};
        }

        bool found = false;
        for (int j = 0 ; j < p.size() && ! found ; ++j)
            if (j != i && is_perfect_coalition(g, b, p.blocks[j])) {
                certificate.roles.emplace_back(Partner{j});
                found = true;
            }
        if (! found)
            return Violation{ViolationKind::NoPartnerForBlock, i};
    }

    return certificate;
}

auto prc::partner_count(const Graph & g, const Partition & p, int i) -> int
{
    if (i < 0 || i >= p.size())
        throw Error(ErrorKind::IndexOutOfRange, "block index " + std::to_string(i) + " outside 0.."
                + std::to_string(p.size() - 1));

    int count = 0;
    for (int j = 0 ; j < p.size() ; ++j)
        if (j != i && is_perfect_coalition(g, p.blocks[i], p.blocks[j]))
            ++count;
    return count;
}
