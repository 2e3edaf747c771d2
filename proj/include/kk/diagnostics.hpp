#pragma once

#include <kk/graph.hpp>
#include <kk/rational.hpp>
#include <kk/transform.hpp>

#include <string>
#include <utility>
#include <vector>

namespace kk {

enum class CheckStatus
{
    pass,
    fail,
    vacuous,
    not_applicable
};

auto to_string(CheckStatus status) -> std::string;

struct CheckEntry
{
    std::string name;
    CheckStatus status;
    std::string detail;
};

struct DiagnosticsReport
{
    std::string graph;
    Rational t;
    std::vector<CheckEntry> checks;

    auto find(const std::string & name) const -> const CheckEntry *;
};

struct DegreePartition
{
    VertexSet v1;
    VertexSet v2;
};

/// Vertices of degree exactly t, and the rest.
auto degree_partition(const Graph & g, int t) -> DegreePartition;

/// (t+1)-cliques split by whether their excess-degree sum is below theta(t).
auto partition_A1_A2(const Graph & g, int t) -> std::pair<std::vector<VertexSet>, std::vector<VertexSet>>;

/// Low-excess cliques taken in lexicographic order, keeping each one that is
/// disjoint from and has no edge to those already kept, and has an external
/// neighbour.
auto derive_clique_family(const Graph & g, int t) -> CliqueFamily;

/// 4 * sum(deg(v) - t) <= (t+1)^2.
auto check_excess_degree(const Graph & g, const Rational & t) -> CheckEntry;

/// At most one intersecting pair of (t+1)-cliques, and no edge between the
/// private parts of any two cliques.
auto check_clique_family(const Graph & g, int t) -> CheckEntry;

auto check_neighbor_nesting(const Graph & g, const CliqueFamily & d, const PeelingTrace & trace) -> CheckEntry;
auto check_cross_degree(const Graph & g, const PeelingTrace & trace) -> CheckEntry;
auto check_shift_sum(const Graph & g, const CliqueFamily & d, const VertexSet & x0, const PeelingTrace & trace) -> CheckEntry;
auto check_w_structure(const Graph & l, const CliqueFamily & d) -> CheckEntry;
auto check_boundary_clique_spread(const Graph & g, const CliqueFamily & d, double t) -> CheckEntry;

/// Every check, in a fixed order, with the clique family and peeling trace
/// derived from the graph itself.
auto run_diagnostics(const Graph & g, const Rational & t) -> DiagnosticsReport;

}
