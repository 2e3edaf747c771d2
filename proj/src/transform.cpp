#include <kk/bounds.hpp>
#include <kk/errors.hpp>
#include <kk/shadow.hpp>
#include <kk/transform.hpp>

#include <algorithm>
#include <sstream>

using std::int64_t;
using std::string;
using std::vector;

namespace kk {

namespace
{
    auto ordered_clique(const VertexSet & s) -> vector<Vertex>
    {
        return s.to_vector();
    }

    void require(bool condition, const string & what)
    {
        if (! condition)
            throw PreconditionError(what);
    }

    void check_family_for_peeling(const Graph & g, const CliqueFamily & d)
    {
        validate_clique_family(g, d);
        auto all = d.union_of(g.order());
        for (std::size_t i = 0; i < d.cliques.size(); ++i) {
            auto outside = g.neighborhood_of_set(d.cliques[i]) - d.cliques[i];
            require(! outside.intersects(all), "edge between distinct cliques at clique " + std::to_string(i + 1));
            require(! outside.empty(), "clique " + std::to_string(i + 1) + " " + d.cliques[i].to_string() + " has no external neighbour");
        }
    }
}

auto CliqueFamily::union_of(int universe) const -> VertexSet
{
    VertexSet result(universe);
    for (auto & c : cliques)
        result |= c;
    return result;
}

void validate_clique_family(const Graph & g, const CliqueFamily & d)
{
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < d.cliques.size(); ++i) {
        auto & c = d.cliques[i];
        require(c.universe() == g.order(), "clique " + std::to_string(i + 1) + " is over a different vertex set");
        require(c.count() == d.t + 1, "clique " + std::to_string(i + 1) + " " + c.to_string() + " does not have t+1 vertices");
        require(is_clique(g, c), "set " + c.to_string() + " does not induce a complete graph");
        require(! c.intersects(seen), "clique " + c.to_string() + " overlaps an earlier clique");
        seen |= c;
    }
}

auto attachment_set(const Graph & g, const VertexSet & clique) -> VertexSet
{
    return g.neighborhood_of_set(clique) - clique;
}

auto regularize(const Graph & g, const vector<Vertex> & a1_order, const VertexSet & a2) -> Graph
{
    auto n = g.order();
    for (auto v : a1_order)
        if (v < 0 || v >= n)
            throw std::out_of_range("regularize: vertex " + std::to_string(v) + " out of range");
    auto a1 = VertexSet::of(n, a1_order);
    require(a1.count() == static_cast<int>(a1_order.size()), "A1 ordering repeats a vertex");
    require(a2.universe() == n, "A2 is over a different vertex set");
    require(a1.count() == a2.count(), "A1 and A2 differ in size");
    require(a1.count() >= 1, "A1 is empty");
    require(is_clique(g, a1), "A1 " + a1.to_string() + " does not induce a complete graph");
    require(is_clique(g, a2), "A2 " + a2.to_string() + " does not induce a complete graph");

    auto t_plus_1 = a1.count();
    auto s = a1 | a2;
    auto only1 = a1 - a2, only2 = a2 - a1;
    auto boundary = g.neighborhood_of_set(s) - s;

    Graph result = g;
    only1.for_each([&](Vertex x) {
        (g.neighbors(x) & only2).for_each([&](Vertex y) { result.remove_edge(x, y); });
    });
    boundary.for_each([&](Vertex u) {
        auto m = std::min(g.neighbors(u).count_and(s), t_plus_1);
        (g.neighbors(u) & s).for_each([&](Vertex x) { result.remove_edge(u, x); });
        for (int i = 0; i < m; ++i)
            result.add_edge(u, a1_order[static_cast<std::size_t>(i)]);
    });
    return result;
}

auto regularize(const Graph & g, const VertexSet & a1, const VertexSet & a2) -> Graph
{
    return regularize(g, ordered_clique(a1), a2);
}

auto RegularizeReport::all_passed() const -> bool
{
    return edge_non_increase.passed && edge_confinement.passed && clique_shifting.passed && triangle_condition.passed;
}

auto check_regularize_properties(const Graph & g, const Graph & gp, const vector<Vertex> & a1_order,
    const VertexSet & a2, int t) -> RegularizeReport
{
    RegularizeReport report;
    auto n = g.order();
    auto a1 = VertexSet::of(n, a1_order);
    auto s = a1 | a2;

    if (gp.edge_count() > g.edge_count())
        report.edge_non_increase = {false, std::to_string(gp.edge_count()) + " edges after, " + std::to_string(g.edge_count()) + " before"};
    report.edges_decreased = gp.edge_count() < g.edge_count();

    if (! is_clique(gp, a1))
        report.edge_confinement = {false, "A1 " + a1.to_string() + " is not complete after the rewrite"};
    else if (! is_clique(gp, a2))
        report.edge_confinement = {false, "A2 " + a2.to_string() + " is not complete after the rewrite"};
    else
        for (auto [u, v] : gp.edges()) {
            bool meets = (a2 - a1).test(u) || (a2 - a1).test(v);
            if (meets && ! (a2.test(u) && a2.test(v))) {
                report.edge_confinement = {false, "edge " + std::to_string(u) + "-" + std::to_string(v) + " leaves A2"};
                break;
            }
        }

    for (auto & a3 : find_cliques(g, t + 1)) {
        auto m = a3.count_and(s);
        auto a4 = a3 - s;
        for (int i = 0; i < m; ++i)
            a4.set(a1_order[static_cast<std::size_t>(i)]);
        if (a4.count() != t + 1 || ! is_clique(gp, a4)) {
            report.clique_shifting = {false, "clique " + a3.to_string() + " shifts to " + a4.to_string() + ", which is not a (t+1)-clique"};
            break;
        }
    }

    auto required = std::min<int64_t>(binomial(t, 2), min_triangle_degree(g));
    for (Vertex v = 0; v < n; ++v)
        if (triangle_degree(gp, v) < required) {
            report.triangle_condition = {false, "vertex " + std::to_string(v) + " lies in " + std::to_string(triangle_degree(gp, v))
                    + " triangles, needs " + std::to_string(required)};
            break;
        }
    return report;
}

auto meets_interval_threshold(int f_start, int f_later) -> bool
{
    if (f_start >= 3)
        return 2 * static_cast<int64_t>(f_later) >= ceil_two_alpha(f_start) + 2;
    return f_later >= f_start;
}

auto peel(const Graph & g, const CliqueFamily & d) -> PeelingTrace
{
    check_family_for_peeling(g, d);
    auto n = g.order();

    PeelingTrace trace;
    trace.t = d.t;
    trace.family = d;
    trace.b1 = g.neighborhood_of_set(d.union_of(n)) - d.union_of(n);

    vector<int> alive(d.cliques.size());
    for (std::size_t i = 0; i < alive.size(); ++i)
        alive[i] = static_cast<int>(i);

    while (! alive.empty()) {
        VertexSet covered(n);
        for (auto i : alive)
            covered |= d.cliques[static_cast<std::size_t>(i)];
        auto boundary = g.neighborhood_of_set(covered) - covered;
        if (boundary.empty())
            break;

        Vertex best = -1;
        int best_f = -1;
        boundary.for_each([&](Vertex u) {
            auto f = g.neighbors(u).count_and(covered);
            if (f > best_f) {
                best_f = f;
                best = u;
            }
        });

        auto pattern = g.neighbors(best) & covered;
        VertexSet cls(n);
        boundary.for_each([&](Vertex v) {
            if ((g.neighbors(v) & covered) == pattern)
                cls.set(v);
        });

        vector<int> survivors;
        for (auto i : alive)
            if (! d.cliques[static_cast<std::size_t>(i)].intersects(g.neighbors(best)))
                survivors.push_back(i);

        trace.steps.push_back({best, cls, cls.count(), best_f, alive, boundary, static_cast<int>(alive.size() - survivors.size())});
        alive = std::move(survivors);
    }

    auto xi = trace.xi();
    for (int i = 1; i <= xi; ++i) {
        int f_start = trace.steps[static_cast<std::size_t>(i - 1)].f;
        int b = 1;
        for (int j = i; j <= xi; ++j)
            if (meets_interval_threshold(f_start, trace.steps[static_cast<std::size_t>(j - 1)].f))
                b = j - i + 1;
        trace.b.push_back(b);
    }

    trace.window = VertexSet(n);
    trace.z = VertexSet(n);
    if (xi > 0) {
        auto b = trace.b.front();
        for (int i = 0; i < b; ++i)
            trace.window |= trace.steps[static_cast<std::size_t>(i)].cls;
        for (int i = 0; i < b; ++i) {
            auto & cls = trace.steps[static_cast<std::size_t>(i)].cls;
            bool has_z = false;
            cls.for_each([&](Vertex u) {
                if ((g.neighbors(u) & trace.window).is_subset_of(cls)) {
                    trace.z.set(u);
                    has_z = true;
                }
            });
            (has_z ? trace.classes_with_z : trace.classes_without_z).push_back(i);
        }
    }
    return trace;
}

auto b_interval(const PeelingTrace & trace, int i) -> int
{
    if (i < 1 || i > trace.xi())
        throw std::out_of_range("b_interval: index " + std::to_string(i) + " outside 1.." + std::to_string(trace.xi()));
    return trace.b[static_cast<std::size_t>(i - 1)];
}

auto format_trace(const PeelingTrace & trace) -> string
{
    std::ostringstream out;
    for (int i = 0; i < trace.xi(); ++i) {
        auto & s = trace.steps[static_cast<std::size_t>(i)];
        out << "i=" << i + 1 << " u=" << s.u << " f=" << s.f << " |U|=" << s.a << " |D|=" << s.alive.size() << '\n';
    }
    return out.str();
}

auto independent_set_target(int lambda) -> int
{
    return static_cast<int>(ceil_two_alpha(lambda)) + 2;
}

auto greedy_independent_set(const Graph & g, const PeelingTrace & trace, int target) -> IndependentSetResult
{
    IndependentSetResult result{VertexSet(g.order()), false};
    if (target <= 0) {
        result.target_met = true;
        return result;
    }

    for (auto i : trace.classes_with_z) {
        if (result.set.count() == target)
            break;
        auto reps = trace.steps[static_cast<std::size_t>(i)].cls & trace.z;
        result.set.set(reps.first());
    }
    if (result.set.count() >= target) {
        result.target_met = true;
        return result;
    }

    auto remaining = trace.window;
    for (auto i : trace.classes_with_z)
        remaining -= trace.steps[static_cast<std::size_t>(i)].cls;

    auto order = trace.classes_without_z;
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return trace.steps[static_cast<std::size_t>(x)].a < trace.steps[static_cast<std::size_t>(y)].a;
    });

    while (! remaining.empty() && result.set.count() < target) {
        const VertexSet * chosen = nullptr;
        for (auto i : order)
            if (trace.steps[static_cast<std::size_t>(i)].cls.intersects(remaining)) {
                chosen = &trace.steps[static_cast<std::size_t>(i)].cls;
                break;
            }
        if (! chosen)
            break;
        auto v = (*chosen & remaining).first();
        result.set.set(v);
        remaining -= *chosen;
        remaining -= g.neighbors(v);
    }
    result.target_met = result.set.count() >= target;
    return result;
}

auto build_J(const Graph & g, const VertexSet & x0, const CliqueFamily & d, int lambda) -> JConstruction
{
    auto n = g.order();
    validate_clique_family(g, d);
    require(! d.cliques.empty(), "clique family is empty");
    require(lambda >= 1, "Lambda must be at least 1");
    require(x0.universe() == n, "X0 is over a different vertex set");

    auto covered = d.union_of(n);
    auto b1 = g.neighborhood_of_set(covered) - covered;
    require(! x0.intersects(covered), "X0 intersects the clique family");
    require(x0.is_subset_of(b1), "X0 is not contained in the boundary B1");
    x0.for_each([&](Vertex v) { require(! g.neighbors(v).intersects(x0), "X0 is not independent (vertex " + std::to_string(v) + ")"); });

    int x = (lambda == 2) ? x0.count() - 1 : x0.count();
    require(x >= 0, "X0 is empty while Lambda = 2");

    JConstruction result{g, VertexSet(n), {}, 0};
    auto members = x0.to_vector();
    for (int i = 0; i < x; ++i)
        result.x.set(members[static_cast<std::size_t>(i)]);
    result.w_order = result.x.to_vector();
    for (auto v : d.cliques.front().to_vector())
        result.w_order.push_back(v);
    auto w = result.x | d.cliques.front();

    auto f1 = [&](Vertex v) { return g.neighbors(v).count_and(covered); };

    auto & j = result.graph;
    result.x.for_each([&](Vertex y) {
        result.x.for_each([&](Vertex z) {
            if (y < z)
                j.add_edge(y, z);
        });
        (g.neighbors(y) & covered).for_each([&](Vertex c) { j.remove_edge(y, c); });
        result.delta_bound -= f1(y);
    });
    result.delta_bound += binomial(x, 2);

    for (std::size_t i = 1; i < d.cliques.size(); ++i)
        (g.neighborhood_of_set(d.cliques[i]) - d.cliques[i]).for_each([&](Vertex u) {
            (g.neighbors(u) & d.cliques[i]).for_each([&](Vertex c) { j.remove_edge(u, c); });
        });

    (b1 - result.x).for_each([&](Vertex v) {
        auto keep = g.neighbors(v) & result.x;
        auto need = f1(v);
        require(need <= static_cast<int>(result.w_order.size()) - keep.count(),
            "vertex " + std::to_string(v) + " needs more positions in W than exist");
        w.for_each([&](Vertex y) { j.remove_edge(v, y); });
        keep.for_each([&](Vertex y) { j.add_edge(v, y); });
        for (auto y : result.w_order) {
            if (need == 0)
                break;
            if (! keep.test(y)) {
                j.add_edge(v, y);
                --need;
            }
        }
    });
    return result;
}

auto build_Lprime(const Graph & l, const CliqueFamily & d, const vector<VertexSet> & w_sets,
    const vector<Vertex> & z_verts, Vertex w1, int a) -> LPrimeConstruction
{
    auto n = l.order();
    validate_clique_family(l, d);
    auto count = d.cliques.size();
    require(count >= 2, "at least two cliques are needed");
    require(w_sets.size() == count && z_verts.size() == count, "one W set and one z vertex per clique");

    auto covered = d.union_of(n);
    VertexSet seen(n);
    vector<int> inner_edges(count, 0);
    for (std::size_t i = 0; i < count; ++i) {
        auto & wi = w_sets[i];
        auto & di = d.cliques[i];
        auto label = "W_" + std::to_string(i + 1);
        require(wi.universe() == n, label + " is over a different vertex set");
        require(wi == attachment_set(l, di), label + " " + wi.to_string() + " is not the attachment set of its clique");
        require(! wi.intersects(covered), label + " meets another clique");
        require(di.test(z_verts[i]), "z_" + std::to_string(i + 1) + " is not in its clique");
        wi.for_each([&](Vertex u) {
            require((l.neighbors(u) & covered) == VertexSet::of(n, {z_verts[i]}),
                "vertex " + std::to_string(u) + " of " + label + " is not attached through z_" + std::to_string(i + 1) + " alone");
        });
        require(! wi.intersects(seen), label + " overlaps an earlier W set");
        require(wi.count() >= 2, label + " has fewer than two vertices");
        seen |= wi;
        wi.for_each([&](Vertex u) { inner_edges[i] += l.neighbors(u).count_and(wi); });
        inner_edges[i] /= 2;
    }

    auto & w_first = w_sets.front();
    auto & w_last = w_sets.back();
    require(w1 >= 0 && w1 < n && w_first.test(w1), "w1 is not in W_1");
    require(a == w_first.count(), "a differs from |W_1|");
    require(inner_edges.front() <= inner_edges.back(), "e_1 exceeds e_d");
    auto shared = l.neighbors(w1).count_and(w_last);
    require(shared <= 1, "w1 has more than one neighbour in W_d");

    LPrimeConstruction result{l, -1 - shared};
    auto & lp = result.graph;
    auto z1 = z_verts.front();

    lp.remove_edge(w1, z1);
    for (std::size_t j = 1; j < count; ++j)
        attachment_set(l, d.cliques[j]).for_each([&](Vertex u) {
            (l.neighbors(u) & d.cliques[j]).for_each([&](Vertex c) { lp.remove_edge(u, c); });
        });

    w_last.for_each([&](Vertex u) { lp.add_edge(w1, u); });

    vector<Vertex> w_ordered{w1};
    for (auto v : w_first.to_vector())
        if (v != w1)
            w_ordered.push_back(v);

    auto d_index = static_cast<int>(count);
    auto paired = std::min(a, d_index - 1);
    for (int i = 2; i <= paired; ++i) {
        auto wi = w_ordered[static_cast<std::size_t>(i - 1)];
        auto & target = w_sets[static_cast<std::size_t>(i - 1)];
        auto hub = l.neighbors(wi).intersects(target) ? z1 : wi;
        target.for_each([&](Vertex u) { lp.add_edge(u, hub); });
    }
    for (int i = a + 1; i <= d_index - 1; ++i)
        w_sets[static_cast<std::size_t>(i - 1)].for_each([&](Vertex u) { lp.add_edge(u, z1); });

    return result;
}

}
