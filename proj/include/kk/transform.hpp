#pragma once

#include <kk/graph.hpp>
#include <kk/vertex_set.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kk {

/// Ordered pairwise-disjoint (t+1)-cliques of a host graph.
struct CliqueFamily
{
    int t = 0;
    std::vector<VertexSet> cliques;

    auto size() const -> std::size_t { return cliques.size(); }
    auto union_of(int universe) const -> VertexSet;
};

/// Throws PreconditionError unless every member is a (t+1)-clique of g and
/// the members are pairwise disjoint.
void validate_clique_family(const Graph & g, const CliqueFamily & d);

/// Clique regularization rewrite. a1_order lists A1 as v_1..v_{t+1}; A2 must be a
/// clique of the same size. Throws PreconditionError otherwise.
auto regularize(const Graph & g, const std::vector<Vertex> & a1_order, const VertexSet & a2) -> Graph;

/// As above with A1 ordered by ascending label.
auto regularize(const Graph & g, const VertexSet & a1, const VertexSet & a2) -> Graph;

struct PropertyCheck
{
    bool passed = true;
    std::string witness;
};

struct RegularizeReport
{
    PropertyCheck edge_non_increase;
    PropertyCheck edge_confinement;
    PropertyCheck clique_shifting;
    PropertyCheck triangle_condition;
    /// Strict edge loss; informational, signals a non-extremal input.
    bool edges_decreased = false;

    auto all_passed() const -> bool;
};

auto check_regularize_properties(const Graph & g, const Graph & gp, const std::vector<Vertex> & a1_order,
    const VertexSet & a2, int t) -> RegularizeReport;

struct PeelingStep
{
    Vertex u;
    VertexSet cls;
    int a;
    int f;
    /// Indices into the original family of the cliques alive at this step.
    std::vector<int> alive;
    VertexSet boundary;
    /// Number of alive cliques touched by N(u).
    int removed;
};

struct PeelingTrace
{
    int t = 0;
    CliqueFamily family;
    VertexSet b1;
    std::vector<PeelingStep> steps;

    /// b_i for i = 1..xi (stored 0-based).
    std::vector<int> b;
    /// Window U = U_1 .. U_b with b = b_1, its Z set and the class split.
    VertexSet window;
    VertexSet z;
    std::vector<int> classes_without_z;
    std::vector<int> classes_with_z;

    auto xi() const -> int { return static_cast<int>(steps.size()); }
    auto lambda() const -> int { return steps.empty() ? 0 : steps.front().f; }
    auto b_prime() const -> int { return static_cast<int>(classes_without_z.size()); }
};

/// Iterative peeling with maximizer ties broken towards the smallest label.
/// Requires disjoint cliques, no edges between distinct cliques, and an
/// external neighbour for every clique.
auto peel(const Graph & g, const CliqueFamily & d) -> PeelingTrace;

/// Largest b with f_{i+b-1}(u_{i+b-1}) reaching the threshold set by
/// f_i(u_i); i is 1-based. Throws std::out_of_range.
auto b_interval(const PeelingTrace & trace, int i) -> int;

/// Threshold test for the interval definition, in exact integer arithmetic.
auto meets_interval_threshold(int f_start, int f_later) -> bool;

/// One line per iteration: i, u_i, f_i, |U_i|, |D_i|.
auto format_trace(const PeelingTrace & trace) -> std::string;

struct IndependentSetResult
{
    VertexSet set;
    bool target_met = false;
};

/// ceil(2 alpha Lambda) + 2.
auto independent_set_target(int lambda) -> int;

auto greedy_independent_set(const Graph & g, const PeelingTrace & trace, int target) -> IndependentSetResult;

struct JConstruction
{
    Graph graph;
    VertexSet x;
    /// Vertices of W in their order y_1 < ... < y_{x+t+1}.
    std::vector<Vertex> w_order;
    /// C(x,2) minus the sum of f_1 over X.
    std::int64_t delta_bound = 0;
};

auto build_J(const Graph & g, const VertexSet & x0, const CliqueFamily & d, int lambda) -> JConstruction;

struct LPrimeConstruction
{
    Graph graph;
    /// -1 - |N_L(w1) ∩ W_d|.
    std::int64_t delta = 0;
};

/// Rewrite for the single-neighbour configuration. w_sets[i] and z_verts[i]
/// belong to d.cliques[i]; the last clique plays the role of D_d.
auto build_Lprime(const Graph & l, const CliqueFamily & d, const std::vector<VertexSet> & w_sets,
    const std::vector<Vertex> & z_verts, Vertex w1, int a) -> LPrimeConstruction;

/// Vertices outside clique i with a neighbour in it.
auto attachment_set(const Graph & g, const VertexSet & clique) -> VertexSet;

}
