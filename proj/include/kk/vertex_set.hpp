#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kk {

using Vertex = int;

/// Fixed-universe bitset over vertices 0..universe()-1.
///
/// Set algebra is word-parallel. Binary operations require both operands to
/// share the same universe size.
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(int universe);

    static auto of(int universe, std::initializer_list<Vertex> members) -> VertexSet;
    static auto of(int universe, std::span<const Vertex> members) -> VertexSet;
    static auto full(int universe) -> VertexSet;

    auto universe() const -> int { return _universe; }

    auto test(Vertex v) const -> bool
    {
        return (_words[static_cast<std::size_t>(v) >> 6] >> (static_cast<unsigned>(v) & 63U)) & 1U;
    }
    void set(Vertex v) { _words[static_cast<std::size_t>(v) >> 6] |= bit(v); }
    void reset(Vertex v) { _words[static_cast<std::size_t>(v) >> 6] &= ~bit(v); }
    void clear();

    auto count() const -> int;
    auto empty() const -> bool;
    auto first() const -> Vertex;

    auto count_and(const VertexSet & other) const -> int;
    auto intersects(const VertexSet & other) const -> bool;
    auto is_subset_of(const VertexSet & other) const -> bool;

    auto operator&=(const VertexSet & other) -> VertexSet &;
    auto operator|=(const VertexSet & other) -> VertexSet &;
    auto operator-=(const VertexSet & other) -> VertexSet &;

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

    /// Colexicographic order: a < b iff the largest element of the symmetric
    /// difference lies in b.
    friend auto colex_less(const VertexSet & a, const VertexSet & b) -> bool;

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t w = 0; w < _words.size(); ++w) {
            auto word = _words[w];
            while (word) {
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
                word &= word - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<Vertex>;
    auto to_string() const -> std::string;

private:
    static auto bit(Vertex v) -> std::uint64_t { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }

    int _universe = 0;
    std::vector<std::uint64_t> _words;
};

}
