#include <kk/errors.hpp>
#include <kk/transform.hpp>

#include "../support/generators.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace kk;

namespace
{
    auto k4_with_pendant() -> Graph
    {
        auto g = Graph::complete(4).disjoint_union(Graph(1));
        g.add_edge(4, 1);
        g.add_edge(4, 3);
        return g;
    }

    auto family_of(int t, int n, std::vector<std::vector<Vertex>> members) -> CliqueFamily
    {
        CliqueFamily d{t, {}};
        for (auto & m : members)
            d.cliques.push_back(VertexSet::of(n, m));
        return d;
    }

    // Clique i gets t+1 consecutive labels starting at i*(t+1).
    auto cliques_graph(int t, int count, int extra) -> std::pair<Graph, CliqueFamily>
    {
        auto n = count * (t + 1) + extra;
        Graph g(n);
        CliqueFamily d{t, {}};
        for (int c = 0; c < count; ++c) {
            VertexSet s(n);
            for (int i = 0; i <= t; ++i) {
                s.set(c * (t + 1) + i);
                for (int j = i + 1; j <= t; ++j)
                    g.add_edge(c * (t + 1) + i, c * (t + 1) + j);
            }
            d.cliques.push_back(s);
        }
        return {g, d};
    }
}

TEST(Regularize, ShiftsBoundaryToInitialSegment)
{
    auto g = k4_with_pendant();
    auto a = VertexSet::of(5, {0, 1, 2, 3});
    auto gp = regularize(g, a, a);
    EXPECT_EQ(gp.neighbors(4).to_vector(), (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(gp.edge_count(), g.edge_count());

    auto full = Graph::complete(4).disjoint_union(Graph(1));
    for (Vertex v = 0; v < 4; ++v)
        full.add_edge(4, v);
    auto gq = regularize(full, a, a);
    EXPECT_TRUE(is_clique(gq, VertexSet::full(5)));
}

TEST(Regularize, RemovesCrossEdgesBetweenTwoCliques)
{
    auto g = Graph::complete(4).disjoint_union(Graph::complete(4)).disjoint_union(Graph(1));
    g.add_edge(3, 4);
    for (Vertex v : {1, 5, 6})
        g.add_edge(8, v);
    auto a1 = VertexSet::of(9, {0, 1, 2, 3});
    auto a2 = VertexSet::of(9, {4, 5, 6, 7});
    auto gp = regularize(g, a1, a2);
    EXPECT_FALSE(gp.has_edge(3, 4));
    EXPECT_EQ(gp.neighbors(8).to_vector(), (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(g.edge_count() - gp.edge_count(), 1);

    auto report = check_regularize_properties(g, gp, a1.to_vector(), a2, 3);
    EXPECT_TRUE(report.all_passed());
    EXPECT_TRUE(report.edges_decreased);
}

TEST(Regularize, IdentityWithoutBoundary)
{
    auto g = Graph::complete(4).disjoint_union(Graph::complete(3));
    auto a = VertexSet::of(7, {0, 1, 2, 3});
    EXPECT_EQ(regularize(g, a, a), g);
    EXPECT_TRUE(check_regularize_properties(g, g, a.to_vector(), a, 3).all_passed());
}

TEST(Regularize, HonoursExplicitOrder)
{
    auto g = k4_with_pendant();
    auto gp = regularize(g, std::vector<Vertex>{3, 2, 1, 0}, VertexSet::of(5, {0, 1, 2, 3}));
    EXPECT_EQ(gp.neighbors(4).to_vector(), (std::vector<Vertex>{2, 3}));
}

TEST(Regularize, Preconditions)
{
    auto g = k4_with_pendant();
    auto a = VertexSet::of(5, {0, 1, 2, 3});
    EXPECT_THROW(regularize(g, VertexSet::of(5, {0, 1, 2, 4}), a), PreconditionError);
    EXPECT_THROW(regularize(g, VertexSet::of(5, {0, 1, 2}), a), PreconditionError);
    EXPECT_THROW(regularize(g, std::vector<Vertex>{0, 0, 1, 2}, a), PreconditionError);
    EXPECT_THROW(regularize(g, std::vector<Vertex>{0, 1, 2, 7}, a), std::out_of_range);
}

TEST(Regularize, CheckerReportsViolations)
{
    auto g = k4_with_pendant();
    auto a = VertexSet::of(5, {0, 1, 2, 3});
    auto bad = regularize(g, a, a);
    bad.add_edge(4, 2);
    bad.add_edge(4, 3);
    auto report = check_regularize_properties(g, bad, a.to_vector(), a, 3);
    EXPECT_FALSE(report.edge_non_increase.passed);
    EXPECT_FALSE(report.edge_non_increase.witness.empty());

    auto broken = regularize(g, a, a);
    broken.remove_edge(0, 1);
    EXPECT_FALSE(check_regularize_properties(g, broken, a.to_vector(), a, 3).edge_confinement.passed);
}

TEST(RegularizeProperty, RandomInstancesPassAllProperties)
{
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 200; ++round) {
        auto inst = kk::testing::regularize_instance(rng);
        auto gp = regularize(inst.g, inst.a1_order, inst.a2);
        auto report = check_regularize_properties(inst.g, gp, inst.a1_order, inst.a2, inst.t);
        EXPECT_TRUE(report.all_passed()) << "round " << round;
        if (VertexSet::of(inst.g.order(), inst.a1_order) == inst.a2)
            EXPECT_EQ(regularize(gp, inst.a1_order, inst.a2), gp) << "round " << round;
    }
}

TEST(Peel, TwoCliquesSharedBoundaryVertex)
{
    auto [g, d] = cliques_graph(2, 2, 1);
    g.add_edge(6, 0);
    g.add_edge(6, 3);
    auto trace = peel(g, d);
    ASSERT_EQ(trace.xi(), 1);
    EXPECT_EQ(trace.steps[0].f, 2);
    EXPECT_EQ(trace.steps[0].cls.to_vector(), std::vector<Vertex>{6});
    EXPECT_EQ(trace.lambda(), 2);
}

TEST(Peel, PrivateBoundaryVertices)
{
    const int k = 4;
    auto [g, d] = cliques_graph(3, k, k);
    for (int c = 0; c < k; ++c)
        g.add_edge(4 * k + c, 4 * c);
    auto trace = peel(g, d);
    ASSERT_EQ(trace.xi(), k);
    for (auto & s : trace.steps) {
        EXPECT_EQ(s.f, 1);
        EXPECT_EQ(s.removed, 1);
    }
    EXPECT_EQ(trace.steps[0].u, 16);
}

TEST(Peel, TwoClassesOverThreeCliques)
{
    auto [g, d] = cliques_graph(2, 3, 3);
    for (Vertex u : {9, 10}) {
        g.add_edge(u, 0);
        g.add_edge(u, 3);
    }
    g.add_edge(11, 6);
    g.add_edge(11, 7);
    g.add_edge(10, 11);
    auto trace = peel(g, d);
    ASSERT_EQ(trace.xi(), 2);
    EXPECT_EQ(trace.steps[0].u, 9);
    EXPECT_EQ(trace.steps[0].cls.to_vector(), (std::vector<Vertex>{9, 10}));
    EXPECT_EQ(trace.steps[0].removed, 2);
    EXPECT_EQ(trace.steps[1].u, 11);
    EXPECT_EQ(trace.steps[1].alive, std::vector<int>{2});
    EXPECT_EQ(trace.b, (std::vector<int>{2, 1}));
    EXPECT_EQ(trace.window.to_vector(), (std::vector<Vertex>{9, 10, 11}));
    EXPECT_EQ(trace.z.to_vector(), std::vector<Vertex>{9});
    EXPECT_EQ(trace.classes_with_z, std::vector<int>{0});
    EXPECT_EQ(trace.classes_without_z, std::vector<int>{1});
    EXPECT_EQ(trace.b_prime(), 1);
    EXPECT_EQ(format_trace(trace), "i=1 u=9 f=2 |U|=2 |D|=3\ni=2 u=11 f=2 |U|=1 |D|=1\n");
}

TEST(Peel, Preconditions)
{
    auto [g, d] = cliques_graph(2, 2, 1);
    g.add_edge(6, 0);
    EXPECT_THROW(peel(g, d), PreconditionError);
    g.add_edge(6, 3);
    g.add_edge(2, 3);
    EXPECT_THROW(peel(g, d), PreconditionError);
    EXPECT_THROW(peel(g, family_of(2, 7, {{0, 1, 2}, {2, 3, 4}})), PreconditionError);
    EXPECT_THROW(peel(g, family_of(2, 7, {{0, 1, 6}})), PreconditionError);
}

TEST(IntervalBound, ThresholdRule)
{
    EXPECT_TRUE(meets_interval_threshold(3, 3));
    EXPECT_FALSE(meets_interval_threshold(3, 2));
    EXPECT_TRUE(meets_interval_threshold(7, 5));
    EXPECT_FALSE(meets_interval_threshold(7, 4));
    EXPECT_TRUE(meets_interval_threshold(1, 1));
    EXPECT_FALSE(meets_interval_threshold(2, 1));
}

TEST(IntervalBound, FromPeelingSequences)
{
    // f-sequence (3,3,3,3,3,2): each boundary vertex sees one clique
    auto [g, d] = cliques_graph(3, 6, 6);
    for (int c = 0; c < 6; ++c)
        for (int j = 0; j < (c < 5 ? 3 : 2); ++j)
            g.add_edge(24 + c, 4 * c + j);
    auto trace = peel(g, d);
    ASSERT_EQ(trace.xi(), 6);
    EXPECT_EQ(b_interval(trace, 1), 5);
    EXPECT_EQ(b_interval(trace, 6), 1);
    EXPECT_THROW(b_interval(trace, 0), std::out_of_range);
    EXPECT_THROW(b_interval(trace, 7), std::out_of_range);

    // f-sequence (2,2,1)
    auto [h, e] = cliques_graph(2, 3, 3);
    h.add_edge(9, 0);
    h.add_edge(9, 1);
    h.add_edge(10, 3);
    h.add_edge(10, 4);
    h.add_edge(11, 6);
    auto short_trace = peel(h, e);
    ASSERT_EQ(short_trace.xi(), 3);
    EXPECT_EQ(b_interval(short_trace, 1), 2);
    EXPECT_EQ(b_interval(short_trace, 3), 1);
}

TEST(PeelProperty, RandomTracesAreConsistentAndDeterministic)
{
    std::mt19937_64 rng(4321);
    for (int round = 0; round < 300; ++round) {
        auto inst = kk::testing::peel_instance(rng);
        auto trace = peel(inst.g, inst.d);
        auto again = peel(inst.g, inst.d);
        EXPECT_EQ(format_trace(trace), format_trace(again));

        auto dsize = static_cast<int>(inst.d.size());
        EXPECT_GE(trace.xi(), 1);
        EXPECT_LE(trace.xi(), dsize);
        int removed = 0;
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            auto & s = trace.steps[i];
            removed += s.removed;
            EXPECT_GE(s.removed, 1);
            EXPECT_TRUE(s.cls.test(s.u));
            EXPECT_TRUE(s.cls.is_subset_of(s.boundary));
            if (i + 1 < trace.steps.size())
                EXPECT_LT(trace.steps[i + 1].alive.size(), s.alive.size());
            VertexSet covered(inst.g.order());
            for (auto c : s.alive)
                covered |= inst.d.cliques[static_cast<std::size_t>(c)];
            auto pattern = inst.g.neighbors(s.u) & covered;
            s.cls.for_each([&](Vertex v) { EXPECT_EQ(inst.g.neighbors(v) & covered, pattern); });
            s.boundary.for_each([&](Vertex v) { EXPECT_LE(inst.g.neighbors(v).count_and(covered), s.f); });
        }
        EXPECT_EQ(removed, dsize);
        for (int i = 1; i <= trace.xi(); ++i) {
            EXPECT_GE(b_interval(trace, i), 1);
            EXPECT_LE(i + b_interval(trace, i) - 1, trace.xi());
        }
    }
}

TEST(IndependentSet, TargetAndSingletonClasses)
{
    EXPECT_EQ(independent_set_target(1), 4);
    EXPECT_EQ(independent_set_target(7), 10);

    const int k = 5;
    auto [g, d] = cliques_graph(2, k, k);
    for (int c = 0; c < k; ++c)
        g.add_edge(3 * k + c, 3 * c);
    auto trace = peel(g, d);
    auto result = greedy_independent_set(g, trace, 3);
    EXPECT_EQ(result.set.count(), 3);
    EXPECT_TRUE(result.target_met);
    auto big = greedy_independent_set(g, trace, 10);
    EXPECT_FALSE(big.target_met);
    EXPECT_EQ(big.set.count(), k);
}

TEST(IndependentSet, AvoidsCrossNeighbours)
{
    auto [g, d] = cliques_graph(2, 3, 3);
    g.add_edge(9, 0);
    g.add_edge(10, 3);
    g.add_edge(11, 6);
    g.add_edge(9, 10);
    auto trace = peel(g, d);
    auto result = greedy_independent_set(g, trace, 3);
    auto members = result.set.to_vector();
    for (auto u : members)
        for (auto v : members)
            EXPECT_FALSE(g.has_edge(u, v));
    EXPECT_EQ(result.set.count(), 2);
    EXPECT_FALSE(result.target_met);
}

TEST(IndependentSetProperty, OutputIsIndependentWithOnePerClass)
{
    std::mt19937_64 rng(99);
    for (int round = 0; round < 300; ++round) {
        auto inst = kk::testing::peel_instance(rng);
        auto trace = peel(inst.g, inst.d);
        auto target = independent_set_target(trace.lambda());
        auto result = greedy_independent_set(inst.g, trace, target);
        EXPECT_LE(result.set.count(), target);
        EXPECT_EQ(result.target_met, result.set.count() >= target);
        EXPECT_TRUE(result.set.is_subset_of(trace.window));
        result.set.for_each([&](Vertex u) { EXPECT_FALSE(inst.g.neighbors(u).intersects(result.set)); });
        for (auto & s : trace.steps)
            EXPECT_LE(s.cls.count_and(result.set), 1);
    }
}

TEST(BuildJ, TinyInstance)
{
    // t = 3, two cliques, X0 = {8, 9, 10}, one more boundary vertex 11
    auto [g, d] = cliques_graph(3, 2, 4);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{8, 0}, {8, 1}, {8, 4}, {9, 1}, {9, 5}, {9, 6}, {10, 2}, {10, 7}, {11, 8}, {11, 0}, {11, 3}})
        g.add_edge(u, v);
    auto x0 = VertexSet::of(12, {8, 9, 10});
    auto j = build_J(g, x0, d, 3);
    EXPECT_EQ(j.x, x0);
    EXPECT_EQ(j.w_order, (std::vector<Vertex>{8, 9, 10, 0, 1, 2, 3}));
    EXPECT_TRUE(is_clique(j.graph, x0));

    auto covered = d.union_of(12);
    x0.for_each([&](Vertex y) { EXPECT_FALSE(j.graph.neighbors(y).intersects(covered)); });
    EXPECT_TRUE(attachment_set(j.graph, d.cliques[1]).empty());

    auto w = x0 | d.cliques[0];
    EXPECT_EQ(j.graph.neighbors(11).count_and(w), g.neighbors(11).count_and(x0 | covered));
    EXPECT_EQ(j.graph.neighbors(11).to_vector(), (std::vector<Vertex>{8, 9, 10}));

    // C(3,2) - (3 + 3 + 2) = -5
    EXPECT_EQ(j.delta_bound, -5);
    EXPECT_LE(j.graph.edge_count() - g.edge_count(), j.delta_bound);
}

TEST(BuildJ, Preconditions)
{
    auto [g, d] = cliques_graph(2, 2, 3);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{6, 0}, {7, 3}, {8, 1}, {6, 7}})
        g.add_edge(u, v);
    EXPECT_THROW(build_J(g, VertexSet::of(9, {6, 7}), d, 3), PreconditionError);
    EXPECT_THROW(build_J(g, VertexSet::of(9, {0, 8}), d, 3), PreconditionError);
    auto lambda_two = build_J(g, VertexSet::of(9, {6, 8}), d, 2);
    EXPECT_EQ(lambda_two.x.count(), 1);
}

TEST(BuildJProperty, DegreePreservationAndEdgeDelta)
{
    std::mt19937_64 rng(555);
    int checked = 0;
    for (int round = 0; round < 300; ++round) {
        auto inst = kk::testing::peel_instance(rng, 4, 3, 7);
        auto trace = peel(inst.g, inst.d);
        auto x0 = greedy_independent_set(inst.g, trace, independent_set_target(trace.lambda())).set;
        if (x0.empty())
            continue;
        JConstruction j;
        try {
            j = build_J(inst.g, x0, inst.d, trace.lambda());
        }
        catch (const PreconditionError &) {
            continue; // too few positions in W for some boundary vertex
        }
        ++checked;
        auto n = inst.g.order();
        auto covered = inst.d.union_of(n);
        auto w = j.x | inst.d.cliques[0];
        (trace.b1 - j.x).for_each([&](Vertex v) {
            EXPECT_EQ(j.graph.neighbors(v).count_and(w), inst.g.neighbors(v).count_and(j.x | covered));
        });
        EXPECT_LE(j.graph.edge_count() - inst.g.edge_count(), j.delta_bound);
        EXPECT_TRUE(is_clique(j.graph, j.x));
    }
    EXPECT_GT(checked, 50);
}

TEST(BuildLprime, SingleNeighbourConfiguration)
{
    Graph l(10);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {5, 6}, {5, 7}, {6, 7}, {3, 4}, {3, 0}, {4, 0}, {8, 9}, {8, 5},
             {9, 5}, {4, 8}, {4, 9}})
        l.add_edge(u, v);
    auto d = family_of(2, 10, {{0, 1, 2}, {5, 6, 7}});
    std::vector<VertexSet> w{VertexSet::of(10, {3, 4}), VertexSet::of(10, {8, 9})};
    auto result = build_Lprime(l, d, w, {0, 5}, 3, 2);
    EXPECT_EQ(result.delta, -1);
    EXPECT_EQ(result.graph.edge_count() - l.edge_count(), result.delta);
    EXPECT_GE(min_triangle_degree(result.graph), 1);
    for (auto & c : d.cliques)
        EXPECT_TRUE(is_clique(result.graph, c));
    EXPECT_FALSE(result.graph.has_edge(3, 0));
    EXPECT_TRUE(result.graph.has_edge(3, 8));
    EXPECT_TRUE(result.graph.has_edge(3, 9));
    EXPECT_FALSE(result.graph.has_edge(8, 5));

    EXPECT_THROW(build_Lprime(l, d, w, {0, 5}, 8, 2), PreconditionError);
    EXPECT_THROW(build_Lprime(l, d, w, {0, 5}, 3, 3), PreconditionError);
    EXPECT_THROW(build_Lprime(l, d, w, {1, 5}, 3, 2), PreconditionError);
}

TEST(BuildLprime, ThreeCliquesWithSharedNeighbour)
{
    // t = 2: W_1 = {3,4}, W_2 = {8,9}, W_3 = {13,14}, w1 = 3 adjacent to 13
    Graph l(15);
    auto clique = [&](int base) {
        l.add_edge(base, base + 1);
        l.add_edge(base, base + 2);
        l.add_edge(base + 1, base + 2);
    };
    clique(0);
    clique(5);
    clique(10);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{3, 4}, {3, 0}, {4, 0}, {8, 9}, {8, 5}, {9, 5}, {13, 14}, {13, 10}, {14, 10}, {3, 13}})
        l.add_edge(u, v);
    auto d = family_of(2, 15, {{0, 1, 2}, {5, 6, 7}, {10, 11, 12}});
    std::vector<VertexSet> w{VertexSet::of(15, {3, 4}), VertexSet::of(15, {8, 9}), VertexSet::of(15, {13, 14})};
    auto result = build_Lprime(l, d, w, {0, 5, 10}, 3, 2);
    EXPECT_EQ(result.delta, -2);
    EXPECT_EQ(result.graph.edge_count() - l.edge_count(), result.delta);
    for (auto & c : d.cliques)
        EXPECT_TRUE(is_clique(result.graph, c));
}
