#pragma once

#include <kk/vertex_set.hpp>

#include <array>
#include <cstdint>
#include <vector>

namespace kk {

/// Simple undirected graph on vertices 0..order()-1 with bitset adjacency.
///
/// A Graph is a plain value: copies are independent, and a const Graph may be
/// read from any number of threads.
class Graph
{
public:
    Graph() = default;
    explicit Graph(int order);

    static auto complete(int order) -> Graph;

    auto order() const -> int { return _order; }
    auto edge_count() const -> int { return _edges; }

    auto has_edge(Vertex u, Vertex v) const -> bool;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    auto neighbors(Vertex v) const -> const VertexSet &;
    auto degree(Vertex v) const -> int;

    auto vertices() const -> VertexSet { return VertexSet::full(_order); }
    auto no_vertices() const -> VertexSet { return VertexSet(_order); }

    /// Union of the neighborhoods of the members of s.
    auto neighborhood_of_set(const VertexSet & s) const -> VertexSet;

    /// Subgraph induced on s, relabelled to 0..|s|-1 in increasing label order.
    auto induced_subgraph(const VertexSet & s) const -> Graph;

    /// Graph on order() + other.order() vertices; other's labels are shifted.
    auto disjoint_union(const Graph & other) const -> Graph;

    /// Graph with vertex v of this graph renamed to perm[v].
    auto relabelled(const std::vector<Vertex> & perm) const -> Graph;

    auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    void check_vertex(Vertex v) const;

    int _order = 0;
    int _edges = 0;
    std::vector<VertexSet> _adj;
};

/// Triangles through an anchor vertex, classified by how many of the two other
/// corners fall in a set P (first index) and in a disjoint set Q (second index).
struct TriangleBreakdown
{
    std::array<std::array<std::int64_t, 3>, 3> counts{};

    auto at(int in_p, int in_q) const -> std::int64_t { return counts.at(in_p).at(in_q); }
    auto total() const -> std::int64_t;
};

auto triangle_degree(const Graph & g, Vertex v) -> std::int64_t;
auto triangle_degrees(const Graph & g) -> std::vector<std::int64_t>;
auto triangle_breakdown(const Graph & g, Vertex v, const VertexSet & p, const VertexSet & q) -> TriangleBreakdown;

/// Minimum triangle degree over all vertices; 0 for the graph with no vertices.
auto min_triangle_degree(const Graph & g) -> std::int64_t;

auto triangle_count(const Graph & g) -> std::int64_t;

auto is_clique(const Graph & g, const VertexSet & s) -> bool;

/// All vertex sets of the given size inducing a complete graph, in
/// lexicographic order of their sorted member lists.
auto find_cliques(const Graph & g, int size) -> std::vector<VertexSet>;

auto connected_components(const Graph & g) -> std::vector<VertexSet>;
auto is_connected(const Graph & g) -> bool;

/// Connected components that are complete graphs on exactly `size` vertices.
auto isolated_clique_components(const Graph & g, int size) -> std::vector<VertexSet>;

}
