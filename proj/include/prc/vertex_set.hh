/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PRC_VERTEX_SET_HH
#define PRC_VERTEX_SET_HH 1

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace prc
{
    /// Largest supported vertex count; one bit per vertex in a single word.
    inline constexpr int max_vertices = 64;

    /**
     * A set of vertex indices packed into one 64-bit word.
     *
     * The set carries no reference to a graph; callers keep every member
     * below the order of the graph they pair it with.
     */
    class VertexSet
    {
        private:
            std::uint64_t _bits = 0;

        public:
            constexpr VertexSet() = default;
            constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) { }

            static auto of(std::initializer_list<int> vertices) -> VertexSet
            {
                VertexSet result;
                for (int v : vertices)
                    result.insert(v);
                return result;
            }

            /// The set {0, 1, ..., n-1}.
            static constexpr auto first(int n) -> VertexSet
            {
                return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
            }

            static constexpr auto singleton(int v) -> VertexSet
            {
                return VertexSet{std::uint64_t{1} << v};
            }

            constexpr auto bits() const -> std::uint64_t { return _bits; }
            constexpr auto empty() const -> bool { return 0 == _bits; }
            constexpr auto size() const -> int { return std::popcount(_bits); }

            constexpr auto contains(int v) const -> bool
            {
                return (_bits >> v) & 1;
            }

            constexpr auto insert(int v) -> void { _bits |= std::uint64_t{1} << v; }
            constexpr auto erase(int v) -> void { _bits &= ~(std::uint64_t{1} << v); }

            /// Smallest member; undefined on the empty set.
            constexpr auto front() const -> int { return std::countr_zero(_bits); }

            /// Largest member plus one, or 0 for the empty set.
            constexpr auto bound() const -> int { return 64 - std::countl_zero(_bits); }

            constexpr auto intersects(VertexSet other) const -> bool
            {
                return 0 != (_bits & other._bits);
            }

            constexpr auto subset_of(VertexSet other) const -> bool
            {
                return 0 == (_bits & ~other._bits);
            }

            constexpr auto operator| (VertexSet o) const -> VertexSet { return VertexSet{_bits | o._bits}; }
            constexpr auto operator& (VertexSet o) const -> VertexSet { return VertexSet{_bits & o._bits}; }
            constexpr auto operator- (VertexSet o) const -> VertexSet { return VertexSet{_bits & ~o._bits}; }
            constexpr auto operator|= (VertexSet o) -> VertexSet & { _bits |= o._bits; return *this; }
            constexpr auto operator&= (VertexSet o) -> VertexSet & { _bits &= o._bits; return *this; }
            constexpr auto operator-= (VertexSet o) -> VertexSet & { _bits &= ~o._bits; return *this; }

            constexpr auto operator== (const VertexSet &) const -> bool = default;
            constexpr auto operator<=> (const VertexSet &) const = default;

            /// Forward iteration over members in ascending order.
            class Iterator
            {
                private:
                    std::uint64_t _rest;

                public:
                    constexpr explicit Iterator(std::uint64_t rest) : _rest(rest) { }
                    constexpr auto operator* () const -> int { return std::countr_zero(_rest); }
                    constexpr auto operator++ () -> Iterator & { _rest &= _rest - 1; return *this; }
                    constexpr auto operator== (const Iterator &) const -> bool = default;
            };

            constexpr auto begin() const -> Iterator { return Iterator{_bits}; }
            constexpr auto end() const -> Iterator { return Iterator{0}; }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(size());
                for (int v : *this)
                    result.push_back(v);
                return result;
            }
    };

    /// Next k-subset of the same popcount in ascending numeric order.
    /// Returns false once the subsets of {0..n-1} are exhausted.
    inline auto next_combination(std::uint64_t & mask, int n) -> bool
    {
        if (0 == mask)
            return false;
        std::uint64_t low = mask & (~mask + 1);
        std::uint64_t ripple = mask + low;
        if (0 == ripple)
            return false;
        std::uint64_t next = (((ripple ^ mask) >> 2) / low) | ripple;
        if (n < 64 && (next >> n) != 0)
            return false;
        mask = next;
        return true;
    }
}

#endif
