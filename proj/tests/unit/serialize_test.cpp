#include <kk/constructions.hpp>
#include <kk/diagnostics.hpp>
#include <kk/search.hpp>
#include <kk/serialize.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace kk;
using nlohmann::json;

namespace
{
    auto temp_path(const std::string & name) -> std::string
    {
        auto p = std::filesystem::temp_directory_path() / ("kk_serialize_" + name);
        std::filesystem::remove(p);
        return p.string();
    }
}

TEST(Serialize, RationalValues)
{
    EXPECT_EQ(rational_to_json(Rational(3)), json(3));
    EXPECT_EQ(rational_to_json(Rational(16, 5)), json(3.2));
}

TEST(Serialize, RecordRoundTrip)
{
    auto r = min_edges_exact(SearchProblem(7, Rational(16, 5)));
    auto j = ResultsCache::record(r);
    EXPECT_EQ(j["min_edges"], 15);
    EXPECT_EQ(j["witnesses"].size(), 2u);
    auto back = ResultsCache::parse_record(j);
    EXPECT_EQ(back.t, Rational(16, 5));
    EXPECT_EQ(back.min_edges, r.min_edges);
    EXPECT_EQ(back.witnesses, r.witnesses);
    EXPECT_EQ(ResultsCache::record(back), j);

    auto none = min_edges_exact(SearchProblem(2, Rational(2)));
    EXPECT_EQ(ResultsCache::record(none)["min_edges"], "infeasible");
    EXPECT_TRUE(ResultsCache::parse_record(ResultsCache::record(none)).infeasible());
    EXPECT_THROW(ResultsCache::parse_record(json{{"n", 1}, {"t", 2}, {"min_edges", "x"}, {"witnesses", json::array()},
                     {"certified", true}, {"nodes", 0}}),
        std::invalid_argument);
}

TEST(Serialize, CacheLookup)
{
    auto path = temp_path("cache.jsonl");
    ResultsCache cache(path);
    EXPECT_FALSE(cache.lookup(6, Rational(2)).has_value());

    auto r = min_edges_exact(SearchProblem(6, Rational(2)));
    cache.append(r);
    {
        std::ofstream out(path, std::ios::app);
        out << "not json\n";
    }
    auto hit = cache.lookup(6, Rational(2));
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(ResultsCache::record(*hit), ResultsCache::record(r));
    EXPECT_FALSE(cache.lookup(6, Rational(3)).has_value());
    EXPECT_FALSE(cache.lookup(7, Rational(2)).has_value());

    auto uncertified = r;
    uncertified.n = 9;
    uncertified.certified = false;
    cache.append(uncertified);
    EXPECT_FALSE(cache.lookup(9, Rational(2)).has_value());

    auto real = min_edges_exact(SearchProblem(6, Rational(16, 5)));
    cache.append(real);
    auto real_hit = cache.lookup(6, Rational::parse("3.2"));
    ASSERT_TRUE(real_hit.has_value());
    EXPECT_EQ(real_hit->min_edges, 12);
    std::filesystem::remove(path);
}

TEST(Serialize, ReportSchemas)
{
    auto g = Graph::complete(3).disjoint_union(Graph(1));
    g.add_edge(3, 0);
    CliqueFamily d{2, {VertexSet::of(4, {0, 1, 2})}};
    auto trace = to_json(peel(g, d));
    EXPECT_EQ(trace["xi"], 1);
    EXPECT_EQ(trace["lambda"], 1);
    EXPECT_EQ(trace["steps"][0]["u"], 3);
    EXPECT_EQ(trace["steps"][0]["class"], json::array({3}));
    EXPECT_EQ(trace["cliques"], json::array({json::array({0, 1, 2})}));

    auto diag = to_json(run_diagnostics(construct_matched_clique(4), Rational(3)));
    EXPECT_EQ(diag["graph"], "E]~o");
    EXPECT_EQ(diag["t"], 3);
    ASSERT_EQ(diag["checks"].size(), 9u);
    for (auto & c : diag["checks"]) {
        EXPECT_TRUE(c.contains("name"));
        EXPECT_TRUE(c.contains("status"));
        EXPECT_TRUE(c.contains("detail"));
    }

    RegularizeReport rr;
    rr.clique_shifting = {false, "example"};
    auto rj = to_json(rr);
    EXPECT_EQ(rj["edge_non_increase"], json({{"passed", true}}));
    EXPECT_EQ(rj["clique_shifting"]["witness"], "example");

    auto cj = to_json(counterexample_check(Rational(16, 5)));
    EXPECT_EQ(cj["counterexample"], true);
    EXPECT_DOUBLE_EQ(cj["required"].get<double>(), 3.52);
    EXPECT_EQ(cj["per_vertex"], 4.0);
}
