#include <kk/shadow.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

using std::int64_t;
using std::vector;

namespace kk {

namespace
{
    void normalise(vector<VertexSet> & sets)
    {
        std::sort(sets.begin(), sets.end(), [](const VertexSet & a, const VertexSet & b) { return colex_less(a, b); });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    }

    // calls f on every size-ell subset of members
    void for_each_subset(const vector<Vertex> & members, int ell, int universe, const std::function<void(const VertexSet &)> & f)
    {
        VertexSet current(universe);
        std::function<void(std::size_t, int)> go = [&](std::size_t from, int need) {
            if (need == 0) {
                f(current);
                return;
            }
            for (auto i = from; i + static_cast<std::size_t>(need) <= members.size(); ++i) {
                current.set(members[i]);
                go(i + 1, need - 1);
                current.reset(members[i]);
            }
        };
        go(0, ell);
    }
}

KFamily::KFamily(int k, int universe_n) :
    _k(k),
    _universe_n(universe_n)
{
    if (k < 0 || universe_n < 0)
        throw std::invalid_argument("family uniformity and universe size must be non-negative");
}

KFamily::KFamily(int k, int universe_n, vector<VertexSet> sets) :
    KFamily(k, universe_n)
{
    for (auto & s : sets) {
        if (s.universe() != universe_n)
            throw std::invalid_argument("family member over a different universe");
        if (s.count() != k)
            throw std::invalid_argument("family member " + s.to_string() + " does not have size " + std::to_string(k));
    }
    _sets = std::move(sets);
    normalise(_sets);
}

auto KFamily::support() const -> VertexSet
{
    VertexSet result(_universe_n);
    for (auto & s : _sets)
        result |= s;
    return result;
}

auto KFamily::contains(const VertexSet & s) const -> bool
{
    return std::binary_search(_sets.begin(), _sets.end(), s, [](const VertexSet & a, const VertexSet & b) { return colex_less(a, b); });
}

auto KFamily::is_subfamily_of(const KFamily & other) const -> bool
{
    return std::all_of(_sets.begin(), _sets.end(), [&](const VertexSet & s) { return other.contains(s); });
}

auto shadow(const KFamily & f, int ell) -> KFamily
{
    if (ell < 1 || ell > f.k())
        throw std::invalid_argument("shadow: ell must lie in 1..k");
    vector<VertexSet> result;
    for (auto & s : f.sets())
        for_each_subset(s.to_vector(), ell, f.universe_n(), [&](const VertexSet & sub) { result.push_back(sub); });
    return KFamily(ell, f.universe_n(), std::move(result));
}

auto gen_binomial(double x, int k) -> double
{
    if (k < 0)
        throw std::invalid_argument("gen_binomial: k must be non-negative");
    if (! (x >= k))
        throw std::invalid_argument("gen_binomial: requires x >= k");
    double value = 1.0;
    for (int i = 0; i < k; ++i)
        value = value * (x - i) / (i + 1);
    return value;
}

auto binomial_inverse(double m, int k) -> double
{
    if (k < 1)
        throw std::invalid_argument("binomial_inverse: k must be at least 1");
    if (! (m >= 1.0))
        throw std::invalid_argument("binomial_inverse: m must be at least 1");

    double lo = k, hi = k + 1.0;
    while (gen_binomial(hi, k) < m)
        hi = k + 2.0 * (hi - k);

    while (true) {
        double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi)
            break;
        if (gen_binomial(mid, k) < m)
            lo = mid;
        else
            hi = mid;
    }

    double nearest = std::round(hi);
    if (nearest >= k && std::abs(nearest - hi) < 1e-9 && gen_binomial(nearest, k) == m)
        return nearest;
    return (gen_binomial(hi, k) - m <= m - gen_binomial(lo, k)) ? hi : lo;
}

auto lovasz_shadow_bound(int64_t m, int k, int ell) -> double
{
    if (ell < 1 || ell > k)
        throw std::invalid_argument("lovasz_shadow_bound: ell must lie in 1..k");
    auto x = binomial_inverse(static_cast<double>(m), k);
    return gen_binomial(x, ell);
}

auto family_to_link_graph(const KFamily & f) -> LinkGraph
{
    if (f.k() != 3)
        throw std::invalid_argument("family_to_link_graph: family must be 3-uniform");

    LinkGraph result{Graph(f.universe_n()), {}, vector<int>(static_cast<std::size_t>(f.universe_n()), 0), true};
    for (auto & s : f.sets()) {
        auto m = s.to_vector();
        result.graph.add_edge(m[0], m[1]);
        result.graph.add_edge(m[0], m[2]);
        result.graph.add_edge(m[1], m[2]);
        for (auto v : m)
            ++result.family_degrees[static_cast<std::size_t>(v)];
    }
    result.triangle_counts = triangle_degrees(result.graph);
    for (std::size_t v = 0; v < result.family_degrees.size(); ++v)
        if (result.family_degrees[v] > result.triangle_counts[v])
            result.containment_holds = false;
    return result;
}

auto binomial(int64_t n, int64_t k) -> int64_t
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    int64_t value = 1;
    for (int64_t i = 1; i <= k; ++i)
        value = value * (n - k + i) / i;
    return value;
}

auto colex_segment(int64_t m, int k) -> KFamily
{
    if (m < 0)
        throw std::invalid_argument("colex_segment: m must be non-negative");
    if (k < 1)
        throw std::invalid_argument("colex_segment: k must be at least 1");

    int universe = k;
    while (binomial(universe, k) < m)
        ++universe;

    vector<VertexSet> sets;
    vector<Vertex> members(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        members[static_cast<std::size_t>(i)] = i;
    for (int64_t produced = 0; produced < m; ++produced) {
        sets.push_back(VertexSet::of(universe, members));
        // colex successor: bump the lowest position that can move up
        std::size_t i = 0;
        while (i + 1 < members.size() && members[i] + 1 == members[i + 1])
            ++i;
        ++members[i];
        for (std::size_t j = 0; j < i; ++j)
            members[j] = static_cast<Vertex>(j);
        if (members.back() >= universe && produced + 1 < m)
            throw std::logic_error("colex_segment: ran past the universe");
    }
    return KFamily(k, universe, std::move(sets));
}

}
