#pragma once

#include <kk/graph.hpp>
#include <kk/vertex_set.hpp>

#include <cstdint>
#include <vector>

namespace kk {

/// A k-uniform family over 0..universe_n-1, stored deduplicated in colex order.
class KFamily
{
public:
    KFamily(int k, int universe_n);
    KFamily(int k, int universe_n, std::vector<VertexSet> sets);

    auto k() const -> int { return _k; }
    auto universe_n() const -> int { return _universe_n; }
    auto sets() const -> const std::vector<VertexSet> & { return _sets; }
    auto size() const -> std::size_t { return _sets.size(); }

    /// Union of all members.
    auto support() const -> VertexSet;

    auto contains(const VertexSet & s) const -> bool;
    auto is_subfamily_of(const KFamily & other) const -> bool;

    friend auto operator==(const KFamily &, const KFamily &) -> bool = default;

private:
    int _k;
    int _universe_n;
    std::vector<VertexSet> _sets;
};

/// All ell-subsets of members of f.
auto shadow(const KFamily & f, int ell) -> KFamily;

/// x(x-1)...(x-k+1)/k! for real x >= k >= 0.
auto gen_binomial(double x, int k) -> double;

/// The unique x >= k with gen_binomial(x, k) == m, to within 1e-12.
auto binomial_inverse(double m, int k) -> double;

/// C(x, ell) with x = binomial_inverse(m, k).
auto lovasz_shadow_bound(std::int64_t m, int k, int ell) -> double;

struct LinkGraph
{
    Graph graph;
    std::vector<std::int64_t> triangle_counts;
    std::vector<int> family_degrees;
    /// deg_F(v) <= triangle count of v for every vertex.
    bool containment_holds = true;
};

/// Graph whose edges are the 2-shadow of a 3-uniform family, with per-vertex
/// triangle counts and family degrees.
auto family_to_link_graph(const KFamily & f) -> LinkGraph;

/// The first m k-subsets of the naturals in colex order, over the smallest
/// universe that holds them (at least k).
auto colex_segment(std::int64_t m, int k) -> KFamily;

/// Exact binomial coefficient for small non-negative integers.
auto binomial(std::int64_t n, std::int64_t k) -> std::int64_t;

}
