#include <kk/graph6.hpp>

#include <cstdint>
#include <stdexcept>

using std::string;
using std::string_view;

namespace kk {

namespace
{
    constexpr int bias = 63;

    void put_size(string & out, std::uint64_t n)
    {
        if (n <= 62)
            out.push_back(static_cast<char>(n + bias));
        else if (n <= 258047) {
            out.push_back('~');
            for (int shift = 12; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63U) + bias));
        }
        else {
            out.append("~~");
            for (int shift = 30; shift >= 0; shift -= 6)
                out.push_back(static_cast<char>(((n >> shift) & 63U) + bias));
        }
    }

    auto sextet(char c) -> unsigned
    {
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: character outside printable range 63..126");
        return static_cast<unsigned>(c - bias);
    }
}

auto to_graph6(const Graph & g) -> string
{
    string out;
    auto n = g.order();
    put_size(out, static_cast<std::uint64_t>(n));

    unsigned current = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            current = (current << 1) | (g.neighbors(j).test(i) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(current + bias));
                current = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((current << (6 - filled)) + bias));
    return out;
}

auto from_graph6(string_view text) -> Graph
{
    if (text.empty())
        throw std::invalid_argument("graph6: empty string");
    if (text.starts_with(">>graph6<<"))
        throw std::invalid_argument("graph6: header not accepted");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != '~')
        n = sextet(text[pos++]);
    else if (text.size() >= 2 && text[1] == '~') {
        if (text.size() < 8)
            throw std::invalid_argument("graph6: truncated size field");
        for (pos = 2; pos < 8; ++pos)
            n = (n << 6) | sextet(text[pos]);
        if (n <= 258047)
            throw std::invalid_argument("graph6: non-minimal size field");
    }
    else {
        if (text.size() < 4)
            throw std::invalid_argument("graph6: truncated size field");
        for (pos = 1; pos < 4; ++pos)
            n = (n << 6) | sextet(text[pos]);
        if (n <= 62)
            throw std::invalid_argument("graph6: non-minimal size field");
    }
    if (n > 1000000)
        throw std::invalid_argument("graph6: graph too large");

    auto bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    auto expected = pos + (bits + 5) / 6;
    if (text.size() != expected)
        throw std::invalid_argument("graph6: expected " + std::to_string(expected) + " characters, got " + std::to_string(text.size()));

    Graph g(static_cast<int>(n));
    std::uint64_t index = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
        for (Vertex i = 0; i < j; ++i, ++index) {
            auto c = sextet(text[pos + index / 6]);
            if ((c >> (5 - index % 6)) & 1U)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        auto last = sextet(text.back());
        auto pad = 6 - bits % 6;
        if (last & ((1U << pad) - 1))
            throw std::invalid_argument("graph6: non-zero padding bits");
    }
    return g;
}

}
