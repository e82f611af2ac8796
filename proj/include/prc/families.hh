/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_FAMILIES_HH
#define PRC_FAMILIES_HH 1

#include <prc/coalition.hh>
#include <prc/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prc
{
    enum class FamilyKind
    {
        Path,
        Cycle,
        Complete,
        Star,
        CompleteBipartite,
        GDelta,
        KmUnionK2,
        T1,
        T2,
        TreeR,
        FamilyB
    };

    /**
     * A named graph construction and its integer parameters.
     *
     *   path:n  cycle:n  complete:n     n vertices
     *   star:k                          K_{1,k}, centre 0
     *   kbip:r,s                        K_{r,s}, sides 0..r-1 and r..r+s-1
     *   gdelta:d                        w=0, v=1, clique u_1..u_d on 2..d+1, edges wv, vu_1
     *   kmk2:m                          K_m on 0..m-1 plus the edge m-(m+1)
     *   t1:r                            K_{r,r} minus the matching i-(r+i)
     *   t2:r,s,m                        K_{r,s} minus the matching i-(r+i), i < m
     *   tree-r                          spider with legs of length 1, 2 and 2
     *   bfam:a,b                        leaf 0, support 1, independent set of a
     *                                   on 2..a+1, clique of b after that
     */
    struct FamilySpec
    {
        FamilyKind kind;
        std::vector<int> params;

        auto operator== (const FamilySpec &) const -> bool = default;
    };

    /// Throws BadParams on an unknown name, a bad parameter list, or a
    /// parameter outside its range.
    auto parse_family_spec(std::string_view text) -> FamilySpec;
    auto to_string(const FamilySpec & spec) -> std::string;

    auto generate(const FamilySpec & spec) -> Graph;

    /// The prc-partition {{w}, {u_1, v}, {u_2}, ..., {u_d}} of G_d, where
    /// {w} partners every other block.
    auto gdelta_partition(int delta) -> Partition;

    struct FamilyBMembership
    {
        bool member = false;
        std::optional<int> leaf;
    };

    enum class TClass
    {
        T1,
        T2,
        Neither
    };

    auto to_string(TClass t) -> std::string;

    struct FamilyMembership
    {
        FamilyBMembership family_b;
        TClass t_class = TClass::Neither;
    };

    /**
     * Leaf-anchored family: some leaf x with support y such that, with
     * A = N(y) - {x} and R = V - (N(y) + {x, y}), R is nonempty, A is
     * independent, R induces a clique and every vertex of A is adjacent to
     * every vertex of R. Requires minimum degree 1. The witness is the
     * smallest qualifying leaf.
     */
    auto is_in_family_B(const Graph & g) -> FamilyBMembership;

    /// Complete bipartite graphs minus a perfect matching (T1) or minus a
    /// matching smaller than both sides (T2); both sides need two vertices.
    auto classify_T1_T2(const Graph & g) -> TClass;

    auto classify(const Graph & g) -> FamilyMembership;

    auto formula_prc_path(int n) -> int;
    auto formula_prc_cycle(int n) -> int;

    /// A prc-partition of P_n or C_n (kind Path or Cycle) with exactly the
    /// formula's number of blocks. Throws NoPartition for P_3.
    auto construct_known_prc_partition(FamilyKind kind, int n) -> Partition;

    /// True iff g is a tree (connected with n-1 edges); the null graph is not.
    auto is_tree(const Graph & g) -> bool;
}

#endif
