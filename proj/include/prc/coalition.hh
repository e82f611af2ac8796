/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_COALITION_HH
#define PRC_COALITION_HH 1

#include <prc/graph.hh>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace prc
{
    /// Ordered blocks of a vertex partition. Well-formedness is checked by
    /// validate_prc_partition, not on construction.
    struct Partition
    {
        std::vector<VertexSet> blocks;

        auto size() const -> int { return static_cast<int>(blocks.size()); }
        auto operator== (const Partition &) const -> bool = default;
    };

    /// Every vertex in its own block, in index order.
    auto singleton_partition(const Graph & g) -> Partition;

    /// True iff the blocks are nonempty, pairwise disjoint and cover V(g).
    auto is_partition_of(const Graph & g, const Partition & p) -> bool;

    struct SingletonDominating
    {
        auto operator== (const SingletonDominating &) const -> bool = default;
    };

    struct Partner
    {
        int block;
        auto operator== (const Partner &) const -> bool = default;
    };

    using Role = std::variant<SingletonDominating, Partner>;

    struct PrcCertificate
    {
        Partition partition;
        std::vector<Role> roles;

        auto operator== (const PrcCertificate &) const -> bool = default;
    };

    enum class ViolationKind
    {
        NotAPartition,
        EmptyBlock,
        NonSingletonDominatingBlock,
        NoPartnerForBlock
    };

    auto to_string(ViolationKind kind) -> std::string;

    struct Violation
    {
        ViolationKind kind;
        std::optional<int> block_index;

        auto operator== (const Violation &) const -> bool = default;
    };

    using ValidationResult = std::variant<PrcCertificate, Violation>;

    /// Every vertex outside s has at most one neighbour inside s.
    auto satisfies_sparse_neighbor_condition(const Graph & g, VertexSet s) -> bool;

    /// Throws OverlappingSets or EmptySet when a and b are not disjoint nonempty sets.
    auto is_perfect_coalition(const Graph & g, VertexSet a, VertexSet b) -> bool;

    auto validate_prc_partition(const Graph & g, const Partition & p) -> ValidationResult;

    /// Number of other blocks forming a perfect coalition with block i.
    auto partner_count(const Graph & g, const Partition & p, int i) -> int;

    /// Ordinary coalition: both sets non-dominating, union dominating.
    auto is_coalition(const Graph & g, VertexSet a, VertexSet b) -> bool;
}

#endif
