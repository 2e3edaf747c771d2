#include <kk/graph6.hpp>
#include <kk/text_io.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>

using std::string;
using std::string_view;
using std::vector;

namespace kk {

namespace
{
    auto trim(string_view s) -> string_view
    {
        auto b = s.find_first_not_of(" \t\r\n");
        if (b == string_view::npos)
            return {};
        auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    auto to_int(string_view s, const char * what) -> int
    {
        s = trim(s);
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument(string("expected an integer for ") + what + ", got '" + string(s) + "'");
        return value;
    }

    auto lines_of(string_view text) -> vector<string_view>
    {
        vector<string_view> lines;
        std::size_t start = 0;
        while (start <= text.size()) {
            auto end = text.find('\n', start);
            if (end == string_view::npos)
                end = text.size();
            auto line = trim(text.substr(start, end - start));
            if (! line.empty() && line.front() != '#')
                lines.push_back(line);
            start = end + 1;
        }
        return lines;
    }

    auto split_ws(string_view s) -> vector<string_view>
    {
        vector<string_view> tokens;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                ++i;
            auto j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t')
                ++j;
            if (j > i)
                tokens.push_back(s.substr(i, j - i));
            i = j;
        }
        return tokens;
    }
}

auto parse_vertex_list(string_view text) -> vector<Vertex>
{
    vector<Vertex> result;
    text = trim(text);
    if (text.empty())
        return result;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == string_view::npos ? string_view::npos : comma - start);
        result.push_back(to_int(piece, "vertex label"));
        if (comma == string_view::npos)
            break;
        start = comma + 1;
    }
    return result;
}

auto parse_family(string_view text) -> KFamily
{
    auto lines = lines_of(text);
    if (lines.empty())
        throw std::invalid_argument("family file: missing 'k n' header");
    auto header = split_ws(lines[0]);
    if (header.size() != 2)
        throw std::invalid_argument("family file: header must be 'k n'");
    auto k = to_int(header[0], "k");
    auto n = to_int(header[1], "n");
    if (k < 1 || n < 0)
        throw std::invalid_argument("family file: need k >= 1 and n >= 0");

    vector<VertexSet> sets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto members = parse_vertex_list(lines[i]);
        for (auto v : members)
            if (v < 0 || v >= n)
                throw std::invalid_argument("family file line " + std::to_string(i + 1) + ": label " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        auto s = VertexSet::of(n, members);
        if (s.count() != static_cast<int>(members.size()) || s.count() != k)
            throw std::invalid_argument("family file line " + std::to_string(i + 1) + ": expected " + std::to_string(k) + " distinct labels");
        sets.push_back(std::move(s));
    }
    return KFamily(k, n, std::move(sets));
}

auto format_family(const KFamily & f) -> string
{
    std::ostringstream out;
    out << f.k() << ' ' << f.universe_n() << '\n';
    for (auto & s : f.sets()) {
        bool first = true;
        s.for_each([&](Vertex v) {
            out << (first ? "" : ",") << v;
            first = false;
        });
        out << '\n';
    }
    return out.str();
}

auto parse_graph(string_view text) -> Graph
{
    auto lines = lines_of(text);
    if (lines.empty())
        throw std::invalid_argument("graph input is empty");

    bool adjacency = lines[0].front() >= '0' && lines[0].front() <= '9' && split_ws(lines[0]).size() == 1
        && lines[0].find_first_not_of("0123456789") == string_view::npos;
    if (! adjacency) {
        if (lines.size() != 1)
            throw std::invalid_argument("graph6 input must be a single line");
        return from_graph6(lines[0]);
    }

    auto n = to_int(lines[0], "graph order");
    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto colon = lines[i].find(':');
        if (colon == string_view::npos)
            throw std::invalid_argument("adjacency list line " + std::to_string(i + 1) + ": expected 'u: v w ...'");
        auto u = to_int(lines[i].substr(0, colon), "vertex");
        for (auto token : split_ws(lines[i].substr(colon + 1)))
            g.add_edge(u, to_int(token, "neighbour"));
    }
    return g;
}

auto format_adjacency_list(const Graph & g) -> string
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (Vertex v = 0; v < g.order(); ++v) {
        out << v << ':';
        g.neighbors(v).for_each([&](Vertex w) { out << ' ' << w; });
        out << '\n';
    }
    return out.str();
}

}
