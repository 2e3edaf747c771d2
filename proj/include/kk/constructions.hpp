#pragma once

#include <kk/graph.hpp>
#include <kk/rational.hpp>

#include <cstdint>
#include <optional>

namespace kk {

/// n / (t+1) disjoint copies of K_{t+1}. Requires (t+1) | n.
auto construct_disjoint_cliques(int n, int t) -> Graph;

/// K_{m+2} minus a perfect matching ({0,1}, {2,3}, ...). Requires even m >= 2.
auto construct_matched_clique(int m) -> Graph;

struct CounterexampleReport
{
    Rational t;
    int ceil_t = 0;
    /// C(t,2) and C(ceil t, 2) - ceil(t)/2.
    Rational required;
    Rational per_vertex;
    bool condition_holds = false;
    bool block_feasible = false;
    bool block_has_clique_component = false;
    std::int64_t block_order = 0;
    std::int64_t block_edges = 0;
    /// Edge count of disjoint K_{t+1} copies on the same vertex count, when
    /// t is an integer and t+1 divides the block order.
    std::optional<std::int64_t> clique_edges;

    /// Condition holds and the block is a feasible graph without a K_{t+1} component.
    auto is_counterexample() const -> bool { return condition_holds && block_feasible && ! block_has_clique_component; }
};

/// Requires t >= 2 with ceil(t) even.
auto counterexample_check(const Rational & t) -> CounterexampleReport;

}
