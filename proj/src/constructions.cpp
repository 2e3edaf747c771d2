#include <kk/constructions.hpp>
#include <kk/search.hpp>

#include <stdexcept>

namespace kk {

auto construct_disjoint_cliques(int n, int t) -> Graph
{
    if (t < 1 || n < 0)
        throw std::invalid_argument("construct_disjoint_cliques: need t >= 1 and n >= 0");
    if (n % (t + 1) != 0)
        throw std::invalid_argument("construct_disjoint_cliques: t+1 = " + std::to_string(t + 1) + " does not divide n = " + std::to_string(n));
    Graph g(n);
    for (int base = 0; base < n; base += t + 1)
        for (int i = 0; i <= t; ++i)
            for (int j = i + 1; j <= t; ++j)
                g.add_edge(base + i, base + j);
    return g;
}

auto construct_matched_clique(int m) -> Graph
{
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("construct_matched_clique: m must be even and at least 2");
    auto g = Graph::complete(m + 2);
    for (int v = 0; v < m + 2; v += 2)
        g.remove_edge(v, v + 1);
    return g;
}

auto counterexample_check(const Rational & t) -> CounterexampleReport
{
    if (t < Rational(2))
        throw std::invalid_argument("counterexample_check: t must be at least 2");
    auto ceil_t = t.ceil();
    if (ceil_t % 2 != 0)
        throw std::invalid_argument("counterexample_check: ceil(t) = " + std::to_string(ceil_t) + " is odd");

    CounterexampleReport report;
    report.t = t;
    report.ceil_t = static_cast<int>(ceil_t);
    report.required = t * (t - Rational(1)) / Rational(2);
    report.per_vertex = Rational(ceil_t * (ceil_t - 1) / 2 - ceil_t / 2);
    report.condition_holds = report.required <= report.per_vertex;

    auto block = construct_matched_clique(report.ceil_t);
    report.block_order = block.order();
    report.block_edges = block.edge_count();
    report.block_feasible = is_feasible(block, t);
    report.block_has_clique_component = ! isolated_clique_components(block, report.ceil_t + 1).empty();
    if (t.is_integer() && report.block_order % (t.num() + 1) == 0)
        report.clique_edges = report.block_order * t.num() / 2;
    return report;
}

}
