/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_SOLVER_HH
#define PRC_SOLVER_HH 1

#include <prc/coalition.hh>

#include <chrono>
#include <cstdint>
#include <optional>

namespace prc
{
    inline constexpr int bruteforce_max_order = 11;
    inline constexpr int solve_max_order = 20;
    inline constexpr int coalition_number_max_order = 10;

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t partitions_tested = 0;
        std::chrono::microseconds wall_time{0};
    };

    struct SolveResult
    {
        int prc = 0;
        std::optional<PrcCertificate> certificate;
        SearchStats stats;
    };

    struct SolveOptions
    {
        /// Worker threads for the branch-and-bound; results do not depend on it.
        int workers = 1;
    };

    /// Exhaustive over all set partitions, validating each one through the
    /// coalition predicates. Throws TooLarge above bruteforce_max_order.
    auto prc_bruteforce(const Graph & g) -> SolveResult;

    /// Branch-and-bound over restricted growth strings. Returns the same value
    /// as prc_bruteforce, with the certificate of the lexicographically
    /// smallest string among maximum-order prc-partitions. Throws TooLarge
    /// above solve_max_order.
    auto prc_solve(const Graph & g, const SolveOptions & options = {}) -> SolveResult;

    /// Coalition number C(G) by partition enumeration. Throws TooLarge above
    /// coalition_number_max_order.
    auto coalition_number_bruteforce(const Graph & g) -> int;

    /// Re-derives every role claim with the coalition predicates.
    auto verify_certificate(const Graph & g, const PrcCertificate & certificate) -> bool;
}

#endif
