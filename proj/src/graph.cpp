#include <kk/graph.hpp>

#include <functional>
#include <stdexcept>
#include <string>

using std::int64_t;
using std::pair;
using std::vector;

namespace kk {

Graph::Graph(int order) :
    _order(order)
{
    if (order < 0)
        throw std::invalid_argument("negative graph order");
    _adj.assign(static_cast<std::size_t>(order), VertexSet(order));
}

auto Graph::complete(int order) -> Graph
{
    Graph g(order);
    for (Vertex u = 0; u < order; ++u)
        for (Vertex v = u + 1; v < order; ++v)
            g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= _order)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " + std::to_string(_order));
}

auto Graph::has_edge(Vertex u, Vertex v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return _adj[static_cast<std::size_t>(u)].test(v);
}

void Graph::add_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    auto & nu = _adj[static_cast<std::size_t>(u)];
    if (nu.test(v))
        return;
    nu.set(v);
    _adj[static_cast<std::size_t>(v)].set(u);
    ++_edges;
}

void Graph::remove_edge(Vertex u, Vertex v)
{
    check_vertex(u);
    check_vertex(v);
    auto & nu = _adj[static_cast<std::size_t>(u)];
    if (! nu.test(v))
        return;
    nu.reset(v);
    _adj[static_cast<std::size_t>(v)].reset(u);
    --_edges;
}

auto Graph::neighbors(Vertex v) const -> const VertexSet &
{
    check_vertex(v);
    return _adj[static_cast<std::size_t>(v)];
}

auto Graph::degree(Vertex v) const -> int
{
    return neighbors(v).count();
}

auto Graph::neighborhood_of_set(const VertexSet & s) const -> VertexSet
{
    VertexSet result(_order);
    s.for_each([&](Vertex u) { result |= neighbors(u); });
    return result;
}

auto Graph::induced_subgraph(const VertexSet & s) const -> Graph
{
    auto members = s.to_vector();
    for (auto v : members)
        check_vertex(v);
    Graph h(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (_adj[static_cast<std::size_t>(members[i])].test(members[j]))
                h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return h;
}

auto Graph::disjoint_union(const Graph & other) const -> Graph
{
    Graph h(_order + other._order);
    for (auto [u, v] : edges())
        h.add_edge(u, v);
    for (auto [u, v] : other.edges())
        h.add_edge(u + _order, v + _order);
    return h;
}

auto Graph::relabelled(const vector<Vertex> & perm) const -> Graph
{
    if (perm.size() != static_cast<std::size_t>(_order))
        throw std::invalid_argument("relabelling has wrong length");
    Graph h(_order);
    for (auto [u, v] : edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

auto Graph::edges() const -> vector<pair<Vertex, Vertex>>
{
    vector<pair<Vertex, Vertex>> result;
    result.reserve(static_cast<std::size_t>(_edges));
    for (Vertex u = 0; u < _order; ++u)
        _adj[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
            if (u < v)
                result.emplace_back(u, v);
        });
    return result;
}

auto TriangleBreakdown::total() const -> int64_t
{
    int64_t sum = 0;
    for (const auto & row : counts)
        for (auto c : row)
            sum += c;
    return sum;
}

auto triangle_degree(const Graph & g, Vertex v) -> int64_t
{
    const auto & nv = g.neighbors(v);
    int64_t twice = 0;
    nv.for_each([&](Vertex a) { twice += nv.count_and(g.neighbors(a)); });
    return twice / 2;
}

auto triangle_degrees(const Graph & g) -> vector<int64_t>
{
    vector<int64_t> result(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        result[static_cast<std::size_t>(v)] = triangle_degree(g, v);
    return result;
}

auto triangle_breakdown(const Graph & g, Vertex v, const VertexSet & p, const VertexSet & q) -> TriangleBreakdown
{
    if (p.intersects(q))
        throw std::invalid_argument("triangle_breakdown: P and Q overlap");
    if (p.test(v) || q.test(v))
        throw std::invalid_argument("triangle_breakdown: anchor vertex lies in P or Q");

    TriangleBreakdown result;
    const auto & nv = g.neighbors(v);
    nv.for_each([&](Vertex a) {
        auto common = nv & g.neighbors(a);
        common.for_each([&](Vertex b) {
            if (b <= a)
                return;
            int in_p = int(p.test(a)) + int(p.test(b));
            int in_q = int(q.test(a)) + int(q.test(b));
            ++result.counts[static_cast<std::size_t>(in_p)][static_cast<std::size_t>(in_q)];
        });
    });
    return result;
}

auto min_triangle_degree(const Graph & g) -> int64_t
{
    if (g.order() == 0)
        return 0;
    int64_t best = triangle_degree(g, 0);
    for (Vertex v = 1; v < g.order(); ++v)
        best = std::min(best, triangle_degree(g, v));
    return best;
}

auto triangle_count(const Graph & g) -> int64_t
{
    int64_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        sum += triangle_degree(g, v);
    return sum / 3;
}

auto is_clique(const Graph & g, const VertexSet & s) -> bool
{
    bool ok = true;
    s.for_each([&](Vertex v) {
        auto others = s;
        others.reset(v);
        if (! others.is_subset_of(g.neighbors(v)))
            ok = false;
    });
    return ok;
}

auto find_cliques(const Graph & g, int size) -> vector<VertexSet>
{
    if (size < 1)
        throw std::invalid_argument("find_cliques: size must be at least 1");

    vector<VertexSet> result;
    VertexSet current(g.order());
    std::function<void(const VertexSet &, int)> extend = [&](const VertexSet & candidates, int need) {
        if (need == 0) {
            result.push_back(current);
            return;
        }
        if (candidates.count() < need)
            return;
        candidates.for_each([&](Vertex v) {
            current.set(v);
            auto next = candidates & g.neighbors(v);
            // keep only later labels so each clique is produced once, in order
            for (Vertex w = 0; w <= v; ++w)
                next.reset(w);
            extend(next, need - 1);
            current.reset(v);
        });
    };
    extend(g.vertices(), size);
    return result;
}

auto connected_components(const Graph & g) -> vector<VertexSet>
{
    vector<VertexSet> result;
    auto unseen = g.vertices();
    while (! unseen.empty()) {
        VertexSet component(g.order());
        component.set(unseen.first());
        VertexSet frontier = component;
        while (! frontier.empty()) {
            auto next = g.neighborhood_of_set(frontier) - component;
            component |= next;
            frontier = next;
        }
        unseen -= component;
        result.push_back(component);
    }
    return result;
}

auto is_connected(const Graph & g) -> bool
{
    return connected_components(g).size() <= 1;
}

auto isolated_clique_components(const Graph & g, int size) -> vector<VertexSet>
{
    if (size < 1)
        throw std::invalid_argument("isolated_clique_components: size must be at least 1");
    vector<VertexSet> result;
    for (auto & component : connected_components(g))
        if (component.count() == size && is_clique(g, component))
            result.push_back(component);
    return result;
}

}
