#pragma once

#include <kk/graph.hpp>
#include <kk/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kk {

/// Minimum-edge problem: n vertices, each in at least C(t,2) triangles.
struct SearchProblem
{
    int n = 0;
    Rational t;

    SearchProblem(int n, Rational t);

    /// C(t,2) = t(t-1)/2, exact.
    auto threshold() const -> Rational;
    /// Smallest integer triangle count meeting the threshold.
    auto required_triangles() const -> std::int64_t;
    /// Smallest d with C(d,2) >= required_triangles(): a lower bound on every degree.
    auto min_degree() const -> int;
};

auto is_feasible(const Graph & g, const Rational & t) -> bool;
auto is_feasible(const Graph & g, double t) -> bool;

struct SearchOptions
{
    /// Total branch-and-bound nodes allowed; 0 means unlimited.
    std::uint64_t budget = 0;
    /// Largest component order the exact search will attempt.
    int max_certified_n = 14;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Isomorphism classes of witnesses kept in the result.
    std::size_t max_witnesses = 100;
};

struct SearchResult
{
    int n = 0;
    Rational t;
    /// Empty when no graph on n vertices meets the condition.
    std::optional<std::int64_t> min_edges;
    /// Canonical graph6 of witness classes, sorted, at most max_witnesses.
    std::vector<std::string> witnesses;
    /// Number of witness isomorphism classes, including any not retained.
    std::int64_t witness_classes = 0;
    std::uint64_t nodes = 0;
    bool certified = false;
    /// "exact" for the branch-and-bound, "oracle-confirmed" for brute force.
    std::string optimality = "exact";
    /// Component orders whose connected optimum was settled, with its value
    /// (nullopt: no connected feasible graph of that order).
    std::vector<std::pair<int, std::optional<std::int64_t>>> component_optima;

    auto infeasible() const -> bool { return certified && ! min_edges; }
};

/// Exact minimum via connected-component decomposition and per-order
/// iterative-deepening branch and bound. When the budget runs out, or an
/// order above max_certified_n would be needed, the result carries
/// certified = false and the best edge count found so far.
auto min_edges_exact(const SearchProblem & p, const SearchOptions & options = {}) -> SearchResult;

/// All connected feasible graphs with `order` vertices and exactly `edges`
/// edges, as sorted canonical graph6 strings.
struct ConnectedLayer
{
    std::vector<std::string> graphs;
    std::uint64_t nodes = 0;
    bool complete = true;
};

auto connected_layer(int order, const SearchProblem & p, std::int64_t edges, std::uint64_t budget = 0, unsigned threads = 1)
    -> ConnectedLayer;

/// Brute force over all labelled graphs on n <= 8 vertices.
auto brute_force_oracle(const SearchProblem & p) -> SearchResult;

/// Lex-ordering condition used to break symmetry: for every pair a < b the
/// rows of a and b, read over the other columns in ascending order, satisfy
/// row(a) <= row(b). Every graph has at least one labelling meeting it.
auto satisfies_row_order(const Graph & g) -> bool;

}
