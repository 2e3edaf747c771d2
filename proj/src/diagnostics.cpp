#include <kk/bounds.hpp>
#include <kk/diagnostics.hpp>
#include <kk/graph6.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

using std::int64_t;
using std::string;
using std::vector;

namespace kk {

namespace
{
    auto entry(string name, CheckStatus status, string detail) -> CheckEntry
    {
        return {std::move(name), status, std::move(detail)};
    }

    auto excess(const Graph & g, const VertexSet & s, int t) -> int64_t
    {
        int64_t sum = 0;
        s.for_each([&](Vertex v) { sum += g.degree(v) - t; });
        return sum;
    }

    auto lex_less(const VertexSet & a, const VertexSet & b) -> bool
    {
        return a.to_vector() < b.to_vector();
    }
}

auto to_string(CheckStatus status) -> string
{
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::not_applicable: return "not-applicable";
    }
    return "unknown";
}

auto DiagnosticsReport::find(const string & name) const -> const CheckEntry *
{
    for (auto & c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

auto degree_partition(const Graph & g, int t) -> DegreePartition
{
    DegreePartition result{VertexSet(g.order()), VertexSet(g.order())};
    for (Vertex v = 0; v < g.order(); ++v)
        (g.degree(v) == t ? result.v1 : result.v2).set(v);
    return result;
}

auto partition_A1_A2(const Graph & g, int t) -> std::pair<vector<VertexSet>, vector<VertexSet>>
{
    std::pair<vector<VertexSet>, vector<VertexSet>> result;
    auto cutoff = theta(t);
    for (auto & c : find_cliques(g, t + 1))
        (static_cast<double>(excess(g, c, t)) < cutoff ? result.first : result.second).push_back(c);
    return result;
}

auto derive_clique_family(const Graph & g, int t) -> CliqueFamily
{
    CliqueFamily d{t, {}};
    VertexSet used(g.order());
    auto low = partition_A1_A2(g, t).first;
    std::sort(low.begin(), low.end(), lex_less);
    for (auto & c : low) {
        if (c.intersects(used) || g.neighborhood_of_set(c).intersects(used))
            continue;
        if ((g.neighborhood_of_set(c) - c).empty())
            continue;
        d.cliques.push_back(c);
        used |= c;
    }
    return d;
}

auto check_excess_degree(const Graph & g, const Rational & t) -> CheckEntry
{
    Rational sum(0);
    for (Vertex v = 0; v < g.order(); ++v)
        sum = sum + Rational(g.degree(v)) - t;
    auto bound = (t + Rational(1)) * (t + Rational(1)) / Rational(4);
    auto detail = "sum " + sum.to_string() + ", bound " + bound.to_string();
    return entry("excess_degree", sum <= bound ? CheckStatus::pass : CheckStatus::fail, detail);
}

auto check_clique_family(const Graph & g, int t) -> CheckEntry
{
    auto cliques = find_cliques(g, t + 1);
    if (cliques.empty())
        return entry("clique_family", CheckStatus::vacuous, "no (t+1)-cliques");

    int64_t intersecting = 0, cross = 0;
    string first_cross;
    for (std::size_t i = 0; i < cliques.size(); ++i)
        for (std::size_t j = i + 1; j < cliques.size(); ++j) {
            if (cliques[i].intersects(cliques[j]))
                ++intersecting;
            auto only_i = cliques[i] - cliques[j], only_j = cliques[j] - cliques[i];
            only_i.for_each([&](Vertex u) {
                auto hits = g.neighbors(u) & only_j;
                cross += hits.count();
                if (first_cross.empty() && ! hits.empty())
                    first_cross = " first cross edge " + std::to_string(u) + "-" + std::to_string(hits.first()) + " between "
                        + cliques[i].to_string() + " and " + cliques[j].to_string();
            });
        }
    auto detail = std::to_string(cliques.size()) + " cliques, " + std::to_string(intersecting) + " intersecting pairs, "
        + std::to_string(cross) + " cross edges" + first_cross;
    return entry("clique_family", intersecting <= 1 && cross == 0 ? CheckStatus::pass : CheckStatus::fail, detail);
}

auto check_neighbor_nesting(const Graph & g, const CliqueFamily & d, const PeelingTrace & trace) -> CheckEntry
{
    if (trace.steps.empty())
        return entry("neighbor_nesting", CheckStatus::not_applicable, "empty peeling trace");

    auto covered = d.union_of(g.order());
    auto on_family = [&](Vertex v) { return g.neighbors(v).count_and(covered); };
    auto shared = [&](Vertex u, Vertex w) { return (g.neighbors(u) & g.neighbors(w)).count_and(covered); };

    int64_t same_pairs = 0, cross_pairs = 0;
    for (auto & step : trace.steps) {
        auto others = trace.b1 - step.cls;
        string failure;
        step.cls.for_each([&](Vertex u) {
            others.for_each([&](Vertex w) {
                ++same_pairs;
                if (failure.empty() && std::min(on_family(u) - 1, on_family(w)) < shared(u, w))
                    failure = "same-class bound fails for u=" + std::to_string(u) + ", u'=" + std::to_string(w);
            });
        });
        if (! failure.empty())
            return entry("neighbor_nesting", CheckStatus::fail, failure);
    }

    auto margin = ceil_alpha(trace.lambda());
    auto b = trace.b.front();
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            if (i == j)
                continue;
            string failure;
            trace.steps[static_cast<std::size_t>(i)].cls.for_each([&](Vertex u) {
                trace.steps[static_cast<std::size_t>(j)].cls.for_each([&](Vertex w) {
                    ++cross_pairs;
                    if (failure.empty() && std::min(on_family(u), on_family(w)) < shared(u, w) + margin)
                        failure = "cross-class bound fails for u=" + std::to_string(u) + ", u'=" + std::to_string(w);
                });
            });
            if (! failure.empty())
                return entry("neighbor_nesting", CheckStatus::fail, failure);
        }

    auto detail = std::to_string(same_pairs) + " same-class pairs, " + std::to_string(cross_pairs) + " cross-class pairs";
    return entry("neighbor_nesting", same_pairs + cross_pairs == 0 ? CheckStatus::vacuous : CheckStatus::pass, detail);
}

auto check_cross_degree(const Graph & g, const PeelingTrace & trace) -> CheckEntry
{
    auto lambda = trace.lambda();
    if (lambda < 2)
        return entry("cross_degree", CheckStatus::not_applicable, "Lambda = " + std::to_string(lambda) + " < 2");
    if (trace.classes_without_z.empty())
        return entry("cross_degree", CheckStatus::vacuous, "every class has a vertex without outside neighbours");

    auto slack = ceil_alpha(lambda) - 1;
    int64_t checked = 0;
    for (auto i : trace.classes_without_z) {
        auto & step = trace.steps[static_cast<std::size_t>(i)];
        auto outside = trace.window - step.cls;
        string failure;
        step.cls.for_each([&](Vertex u) {
            ++checked;
            int64_t count = g.neighbors(u).count_and(outside);
            if (failure.empty() && count * slack > lambda + step.a - 2)
                failure = "vertex " + std::to_string(u) + " has " + std::to_string(count) + " neighbours in other classes";
        });
        if (! failure.empty())
            return entry("cross_degree", CheckStatus::fail, failure);
    }
    return entry("cross_degree", CheckStatus::pass, std::to_string(checked) + " vertices checked");
}

auto check_shift_sum(const Graph & g, const CliqueFamily & d, const VertexSet & x0, const PeelingTrace & trace) -> CheckEntry
{
    auto lambda = trace.lambda();
    auto per = lambda - ceil_alpha(lambda);
    if (x0.empty())
        return entry("shift_sum", CheckStatus::pass, "X0 empty: 0 <= " + std::to_string(lambda));

    auto covered = d.union_of(g.order());
    auto members = x0.to_vector();
    int64_t checked = 0;
    string failure;
    trace.b1.for_each([&](Vertex v) {
        vector<int64_t> overlaps;
        for (auto x : members)
            overlaps.push_back((g.neighbors(v) & g.neighbors(x)).count_and(covered));
        std::sort(overlaps.rbegin(), overlaps.rend());
        int64_t running = 0;
        for (std::size_t zeta = 1; zeta <= overlaps.size(); ++zeta) {
            running += overlaps[zeta - 1];
            ++checked;
            auto bound = static_cast<int64_t>(zeta) * per + lambda;
            if (failure.empty() && running > bound)
                failure = "vertex " + std::to_string(v) + ", zeta=" + std::to_string(zeta) + ": " + std::to_string(running) + " > "
                    + std::to_string(bound);
        }
    });
    if (! failure.empty())
        return entry("shift_sum", CheckStatus::fail, failure);
    return entry("shift_sum", checked == 0 ? CheckStatus::vacuous : CheckStatus::pass, std::to_string(checked) + " (v, zeta) cases");
}

auto check_w_structure(const Graph & l, const CliqueFamily & d) -> CheckEntry
{
    if (d.cliques.empty())
        return entry("w_structure", CheckStatus::not_applicable, "empty clique family");

    auto covered = d.union_of(l.order());
    auto boundary = l.neighborhood_of_set(covered) - covered;
    bool single = true;
    boundary.for_each([&](Vertex u) {
        if (l.neighbors(u).count_and(covered) != 1)
            single = false;
    });
    if (! single)
        return entry("w_structure", CheckStatus::not_applicable, "some boundary vertex has more than one neighbour on the cliques");

    vector<VertexSet> w;
    vector<int64_t> e;
    for (std::size_t i = 0; i < d.cliques.size(); ++i) {
        auto wi = attachment_set(l, d.cliques[i]);
        auto label = "W_" + std::to_string(i + 1);
        if (wi.count() < 2)
            return entry("w_structure", CheckStatus::fail, label + " has " + std::to_string(wi.count()) + " vertices");
        auto apex = l.neighborhood_of_set(wi) & d.cliques[i];
        if (apex.count() != 1)
            return entry("w_structure", CheckStatus::fail, label + " attaches through " + std::to_string(apex.count()) + " clique vertices");
        int64_t inner = 0;
        wi.for_each([&](Vertex u) { inner += l.neighbors(u).count_and(wi); });
        if (inner == 0)
            return entry("w_structure", CheckStatus::fail, label + " " + wi.to_string() + " is independent");
        w.push_back(wi);
        e.push_back(inner / 2);
    }

    if (d.cliques.size() == 1)
        return entry("w_structure", CheckStatus::vacuous, "single clique: structure holds, no pair to search");

    string pair;
    for (std::size_t i = 0; i < w.size() && pair.empty(); ++i)
        for (std::size_t j = 0; j < w.size() && pair.empty(); ++j) {
            if (i == j || e[i] > e[j])
                continue;
            w[i].for_each([&](Vertex x) {
                if (pair.empty() && l.neighbors(x).count_and(w[j]) <= 1)
                    pair = "pair found: i=" + std::to_string(i + 1) + ", j=" + std::to_string(j + 1) + ", w=" + std::to_string(x);
            });
        }
    return entry("w_structure", CheckStatus::pass, pair.empty() ? "no sparse pair exists" : pair);
}

auto check_boundary_clique_spread(const Graph & g, const CliqueFamily & d, double t) -> CheckEntry
{
    auto th = theta(t);
    auto first = std::sqrt(2 * th) + 3, second = std::sqrt(3 * th) + 5;
    auto covered = d.union_of(g.order());
    auto boundary = g.neighborhood_of_set(covered) - covered;

    int64_t hypotheses = 0;
    string failure;
    boundary.for_each([&](Vertex u) {
        auto mu = g.neighbors(u).count_and(covered);
        int k = 0;
        for (auto & c : d.cliques)
            if (g.neighbors(u).intersects(c))
                ++k;
        if (mu >= first - 1e-9) {
            ++hypotheses;
            if (k > 3 && failure.empty())
                failure = "vertex " + std::to_string(u) + " touches " + std::to_string(k) + " cliques with " + std::to_string(mu) + " neighbours";
        }
        if (mu >= second - 1e-9) {
            ++hypotheses;
            if (k > 2 && failure.empty())
                failure = "vertex " + std::to_string(u) + " touches " + std::to_string(k) + " cliques with " + std::to_string(mu) + " neighbours";
        }
    });
    if (! failure.empty())
        return entry("boundary_clique_spread", CheckStatus::fail, failure);
    if (hypotheses == 0)
        return entry("boundary_clique_spread", CheckStatus::vacuous, "no boundary vertex reaches the neighbourhood thresholds");
    return entry("boundary_clique_spread", CheckStatus::pass, std::to_string(hypotheses) + " hypothesis instances");
}

auto run_diagnostics(const Graph & g, const Rational & t) -> DiagnosticsReport
{
    DiagnosticsReport report{to_graph6(g), t, {}};
    report.checks.push_back(check_excess_degree(g, t));

    const vector<string> clique_checks{"clique_family", "clique_partition", "degree_partition", "neighbor_nesting", "cross_degree",
        "shift_sum", "w_structure", "boundary_clique_spread"};
    if (! t.is_integer()) {
        for (auto & name : clique_checks)
            report.checks.push_back(entry(name, CheckStatus::not_applicable, "t is not an integer"));
        return report;
    }
    auto ti = static_cast<int>(t.num());

    report.checks.push_back(check_clique_family(g, ti));

    auto [low, high] = partition_A1_A2(g, ti);
    report.checks.push_back(entry("clique_partition", low.empty() && high.empty() ? CheckStatus::vacuous : CheckStatus::pass,
        std::to_string(low.size()) + " low-excess cliques, " + std::to_string(high.size()) + " high-excess cliques"));

    auto parts = degree_partition(g, ti);
    report.checks.push_back(entry("degree_partition", CheckStatus::pass,
        std::to_string(parts.v1.count()) + " vertices of degree t, " + std::to_string(parts.v2.count()) + " others"));

    auto d = derive_clique_family(g, ti);
    if (d.cliques.empty()) {
        for (std::size_t i = 3; i < clique_checks.size(); ++i)
            report.checks.push_back(entry(clique_checks[i], CheckStatus::not_applicable, "no low-excess clique with an external neighbour"));
        return report;
    }

    auto trace = peel(g, d);
    report.checks.push_back(check_neighbor_nesting(g, d, trace));
    report.checks.push_back(check_cross_degree(g, trace));
    auto x0 = greedy_independent_set(g, trace, independent_set_target(trace.lambda())).set;
    report.checks.push_back(check_shift_sum(g, d, x0, trace));
    report.checks.push_back(check_w_structure(g, d));
    report.checks.push_back(check_boundary_clique_spread(g, d, t.to_double()));
    return report;
}

}
