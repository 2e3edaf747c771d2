#include <kk/vertex_set.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

using std::vector;

namespace kk {

namespace
{
    auto word_count(int universe) -> std::size_t
    {
        return (static_cast<std::size_t>(universe) + 63) / 64;
    }

    void check_member(int universe, Vertex v)
    {
        if (v < 0 || v >= universe)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe));
    }
}

VertexSet::VertexSet(int universe) :
    _universe(universe),
    _words(word_count(universe), 0)
{
    if (universe < 0)
        throw std::invalid_argument("negative universe size");
}

auto VertexSet::of(int universe, std::initializer_list<Vertex> members) -> VertexSet
{
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

auto VertexSet::of(int universe, std::span<const Vertex> members) -> VertexSet
{
    VertexSet s(universe);
    for (auto v : members) {
        check_member(universe, v);
        s.set(v);
    }
    return s;
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v)
        s.set(v);
    return s;
}

void VertexSet::clear()
{
    std::fill(_words.begin(), _words.end(), 0);
}

auto VertexSet::count() const -> int
{
    int total = 0;
    for (auto w : _words)
        total += std::popcount(w);
    return total;
}

auto VertexSet::empty() const -> bool
{
    return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
}

auto VertexSet::first() const -> Vertex
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w])
            return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(_words[w])));
    return -1;
}

auto VertexSet::count_and(const VertexSet & other) const -> int
{
    int total = 0;
    for (std::size_t w = 0; w < _words.size(); ++w)
        total += std::popcount(_words[w] & other._words[w]);
    return total;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w] & other._words[w])
            return true;
    return false;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w] & ~other._words[w])
            return false;
    return true;
}

auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        _words[w] &= other._words[w];
    return *this;
}

auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        _words[w] |= other._words[w];
    return *this;
}

auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        _words[w] &= ~other._words[w];
    return *this;
}

auto colex_less(const VertexSet & a, const VertexSet & b) -> bool
{
    for (auto w = a._words.size(); w-- > 0;) {
        if (a._words[w] != b._words[w])
            return a._words[w] < b._words[w];
    }
    return false;
}

auto VertexSet::to_vector() const -> vector<Vertex>
{
    vector<Vertex> result;
    result.reserve(static_cast<std::size_t>(count()));
    for_each([&](Vertex v) { result.push_back(v); });
    return result;
}

auto VertexSet::to_string() const -> std::string
{
    std::ostringstream out;
    out << '{';
    bool first_member = true;
    for_each([&](Vertex v) {
        if (! first_member)
            out << ',';
        out << v;
        first_member = false;
    });
    out << '}';
    return out.str();
}

}
