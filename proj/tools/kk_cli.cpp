#include <kk/bounds.hpp>
#include <kk/canonical.hpp>
#include <kk/constructions.hpp>
#include <kk/diagnostics.hpp>
#include <kk/graph6.hpp>
#include <kk/search.hpp>
#include <kk/serialize.hpp>
#include <kk/shadow.hpp>
#include <kk/text_io.hpp>
#include <kk/transform.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using nlohmann::json;
using std::string;
using std::vector;

using namespace kk;

namespace
{
    constexpr std::uint64_t default_seed = 1;
    const char * const default_cache = "kk_results.jsonl";

    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    struct RunConfig
    {
        int n = -1;
        string t;
        int k = 3;
        int ell = 2;
        std::int64_t m = -1;
        std::uint64_t budget = 0;
        string cache;
        bool force = false;
        std::uint64_t seed = default_seed;
        string out;
        unsigned threads = 0;

        string graph;
        string family;
        int random_size = -1;
        string a1, a2;
        string cliques;
        int matched_clique = -1;
        bool disjoint_cliques = false;
        bool counterexample = false;
        std::int64_t lambda = -1;
        vector<std::int64_t> f_values;
    };

    auto read_text(const string & value) -> string
    {
        std::error_code ec;
        if (std::filesystem::is_regular_file(value, ec)) {
            std::ifstream in(value);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }
        return value;
    }

    auto parse_t(const string & text) -> Rational
    {
        if (text.empty())
            throw UsageError("--t is required");
        Rational t;
        try {
            t = Rational::parse(text);
        }
        catch (const std::exception &) {
            throw UsageError("--t must be a number, got '" + text + "'");
        }
        if (t < Rational(2))
            throw UsageError("--t must be at least 2");
        return t;
    }

    auto integer_t(const Rational & t) -> int
    {
        if (! t.is_integer())
            throw UsageError("this subcommand needs an integer --t");
        return static_cast<int>(t.num());
    }

    auto load_graph(const RunConfig & cfg) -> Graph
    {
        if (cfg.graph.empty())
            throw UsageError("--graph is required");
        return parse_graph(read_text(cfg.graph));
    }

    auto parse_set(const string & text, int n, const char * what) -> vector<Vertex>
    {
        if (text.empty())
            throw UsageError(string(what) + " is required");
        auto members = parse_vertex_list(text);
        for (auto v : members)
            if (v < 0 || v >= n)
                throw UsageError(string(what) + ": vertex " + std::to_string(v) + " out of range");
        return members;
    }

    void emit(const RunConfig & cfg, json j, const Graph * artifact = nullptr)
    {
        j["seed"] = cfg.seed;
        auto text = j.dump(2);
        std::cout << text << '\n';
        if (! cfg.out.empty()) {
            if (artifact) {
                std::ofstream(cfg.out) << to_graph6(*artifact) << '\n';
                std::ofstream(cfg.out + ".json") << text << '\n';
            }
            else
                std::ofstream(cfg.out) << text << '\n';
        }
    }

    auto cmd_search(const RunConfig & cfg) -> int
    {
        if (cfg.n < 0)
            throw UsageError("--n must be given and non-negative");
        auto t = parse_t(cfg.t);
        SearchProblem problem(cfg.n, t);

        string cache_path = cfg.cache;
        if (cache_path.empty()) {
            auto env = std::getenv("KK_CACHE");
            cache_path = env ? env : default_cache;
        }
        ResultsCache cache(cache_path);

        std::optional<SearchResult> result;
        if (! cfg.force)
            result = cache.lookup(cfg.n, t);
        if (! result) {
            SearchOptions options;
            options.budget = cfg.budget;
            options.threads = cfg.threads;
            result = min_edges_exact(problem, options);
            if (result->certified)
                cache.append(*result);
        }
        auto j = ResultsCache::record(*result);
        if (! result->certified && ! result->min_edges)
            j["min_edges"] = nullptr;
        emit(cfg, j);
        return result->certified ? 0 : 2;
    }

    auto cmd_oracle(const RunConfig & cfg) -> int
    {
        if (cfg.n < 0 || cfg.n > 8)
            throw UsageError("--n must lie in 0..8 for the brute-force oracle");
        auto result = brute_force_oracle(SearchProblem(cfg.n, parse_t(cfg.t)));
        auto j = ResultsCache::record(result);
        j["optimality"] = result.optimality;
        emit(cfg, j);
        return 0;
    }

    auto random_family(int m, int universe, int k, std::uint64_t seed) -> KFamily
    {
        if (universe < k || binomial(universe, k) < m)
            throw UsageError("not enough " + std::to_string(k) + "-subsets of " + std::to_string(universe) + " points");
        std::mt19937_64 rng(seed);
        vector<Vertex> points(static_cast<std::size_t>(universe));
        for (int i = 0; i < universe; ++i)
            points[static_cast<std::size_t>(i)] = i;
        vector<VertexSet> sets;
        KFamily f(k, universe);
        while (static_cast<int>(f.size()) < m) {
            std::shuffle(points.begin(), points.end(), rng);
            sets.push_back(VertexSet::of(universe, std::span<const Vertex>(points.data(), static_cast<std::size_t>(k))));
            f = KFamily(k, universe, sets);
        }
        return f;
    }

    auto cmd_shadow(const RunConfig & cfg) -> int
    {
        KFamily f = [&] {
            if (cfg.random_size >= 0) {
                if (cfg.n < 0)
                    throw UsageError("--random-size needs --n for the universe");
                return random_family(cfg.random_size, cfg.n, cfg.k, cfg.seed);
            }
            if (cfg.family.empty())
                throw UsageError("--family or --random-size is required");
            return parse_family(read_text(cfg.family));
        }();
        if (cfg.ell < 1 || cfg.ell > f.k())
            throw UsageError("--ell must lie in 1..k");

        auto sh = shadow(f, cfg.ell);
        json j{{"k", f.k()}, {"n", f.universe_n()}, {"ell", cfg.ell}, {"family_size", f.size()}, {"shadow_size", sh.size()}};
        if (f.size() > 0)
            j["bound"] = lovasz_shadow_bound(static_cast<std::int64_t>(f.size()), f.k(), cfg.ell);
        else
            j["bound"] = 0.0;
        if (cfg.random_size >= 0)
            j["family"] = format_family(f);
        emit(cfg, j);
        return 0;
    }

    auto cmd_bound(const RunConfig & cfg) -> int
    {
        if (cfg.m < 1)
            throw UsageError("--m must be at least 1");
        if (cfg.k < 1 || cfg.ell < 1 || cfg.ell > cfg.k)
            throw UsageError("need k >= 1 and 1 <= ell <= k");
        auto x = binomial_inverse(static_cast<double>(cfg.m), cfg.k);
        emit(cfg, {{"m", cfg.m}, {"k", cfg.k}, {"ell", cfg.ell}, {"x", x}, {"bound", lovasz_shadow_bound(cfg.m, cfg.k, cfg.ell)}});
        return 0;
    }

    auto cmd_transform(const RunConfig & cfg) -> int
    {
        auto g = load_graph(cfg);
        auto a1 = parse_set(cfg.a1, g.order(), "--a1");
        auto a2_list = cfg.a2.empty() ? a1 : parse_set(cfg.a2, g.order(), "--a2");
        auto a2 = VertexSet::of(g.order(), a2_list);
        auto gp = regularize(g, a1, a2);
        auto report = check_regularize_properties(g, gp, a1, a2, static_cast<int>(a1.size()) - 1);
        emit(cfg,
            {{"input", to_graph6(g)}, {"graph", to_graph6(gp)}, {"edges_before", g.edge_count()}, {"edges_after", gp.edge_count()},
                {"properties", to_json(report)}},
            &gp);
        return 0;
    }

    auto parse_family_arg(const string & text, int n, int t) -> CliqueFamily
    {
        CliqueFamily d{t, {}};
        std::stringstream in(text);
        string piece;
        while (std::getline(in, piece, ';'))
            if (! piece.empty())
                d.cliques.push_back(VertexSet::of(n, parse_set(piece, n, "--cliques")));
        return d;
    }

    auto cmd_peel(const RunConfig & cfg) -> int
    {
        auto g = load_graph(cfg);
        auto t = integer_t(parse_t(cfg.t));
        auto d = cfg.cliques.empty() ? derive_clique_family(g, t) : parse_family_arg(cfg.cliques, g.order(), t);
        auto trace = peel(g, d);
        auto j = to_json(trace);
        j["graph"] = to_graph6(g);
        j["report"] = format_trace(trace);
        emit(cfg, j);
        return 0;
    }

    auto cmd_construct(const RunConfig & cfg) -> int
    {
        int chosen = int(cfg.matched_clique >= 0) + int(cfg.disjoint_cliques) + int(cfg.counterexample);
        if (chosen != 1)
            throw UsageError("choose exactly one of --matched-clique, --disjoint-cliques, --counterexample");

        if (cfg.counterexample) {
            auto t = parse_t(cfg.t);
            auto report = counterexample_check(t);
            auto block = construct_matched_clique(report.ceil_t);
            auto j = to_json(report);
            j["graph"] = to_graph6(block);
            emit(cfg, j, &block);
            return 0;
        }

        Graph g;
        if (cfg.matched_clique >= 0)
            g = construct_matched_clique(cfg.matched_clique);
        else {
            if (cfg.n < 0)
                throw UsageError("--disjoint-cliques needs --n");
            g = construct_disjoint_cliques(cfg.n, integer_t(parse_t(cfg.t)));
        }
        auto degrees = triangle_degrees(g);
        emit(cfg, {{"graph", to_graph6(g)}, {"order", g.order()}, {"edges", g.edge_count()}, {"triangle_degrees", degrees}}, &g);
        return 0;
    }

    auto cmd_verify(const RunConfig & cfg) -> int
    {
        auto g = load_graph(cfg);
        auto report = run_diagnostics(g, parse_t(cfg.t));
        emit(cfg, to_json(report));
        return 0;
    }

    auto cmd_bounds(const RunConfig & cfg) -> int
    {
        auto t = parse_t(cfg.t);
        auto td = t.to_double();
        auto counts = clique_count_bounds(td);
        json b = json::array();
        auto fs = cfg.f_values.empty() ? vector<std::int64_t>{1, 2, 7, 8} : cfg.f_values;
        for (auto f : fs) {
            if (f < 1)
                throw UsageError("--f values must be at least 1");
            auto exact = b_upper_bound_exact(f, t);
            b.push_back({{"f", f}, {"value", b_upper_bound(f, td)}, {"exact", exact.to_string()}});
        }
        json j{{"t", rational_to_json(t)}, {"alpha", "4/7"}, {"theta", counts.theta}, {"c", counts.c},
            {"clique_count_upper", counts.upper}, {"clique_count_lower", counts.lower}, {"excess_degree_bound", excess_degree_bound(td)},
            {"b_upper_bound", b}};
        if (cfg.lambda >= 1) {
            json decay = json::array();
            for (int jdx = 1; jdx <= 6; ++jdx)
                decay.push_back(decay_bound(jdx, static_cast<double>(cfg.lambda)));
            j["lambda"] = cfg.lambda;
            j["decay_bound"] = decay;
            j["independent_set_target"] = independent_set_target(static_cast<int>(cfg.lambda));
        }
        emit(cfg, j);
        return 0;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Exact small-scale toolkit for minimum-degree triangle problems and Kruskal-Katona shadows"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App * sub) {
        sub->add_option("--seed", cfg.seed, "Seed for randomized steps (recorded in output)")->capture_default_str();
        sub->add_option("--out", cfg.out, "Also write the result to this path");
    };

    auto search = app.add_subcommand("search", "Exact minimum edge count for (n, t)");
    search->add_option("--n", cfg.n, "Number of vertices")->required();
    search->add_option("--t", cfg.t, "Clique parameter t (integer, decimal or p/q)")->required();
    search->add_option("--budget", cfg.budget, "Node budget (0 = unlimited)");
    search->add_option("--cache", cfg.cache, "Results cache path (default $KK_CACHE or kk_results.jsonl)");
    search->add_flag("--force", cfg.force, "Ignore cached results");
    search->add_option("--threads", cfg.threads, "Worker threads (0 = hardware concurrency)");
    common(search);

    auto oracle = app.add_subcommand("oracle", "Brute-force minimum for n <= 8");
    oracle->add_option("--n", cfg.n, "Number of vertices")->required();
    oracle->add_option("--t", cfg.t, "Clique parameter t")->required();
    common(oracle);

    auto shadow_cmd = app.add_subcommand("shadow", "Shadow size of a family next to the Lovasz bound");
    shadow_cmd->add_option("--family", cfg.family, "Family file or literal text ('k n' header, one set per line)");
    shadow_cmd->add_option("--random-size", cfg.random_size, "Draw a random family of this size instead");
    shadow_cmd->add_option("--n", cfg.n, "Universe size for --random-size");
    shadow_cmd->add_option("--k", cfg.k, "Uniformity for --random-size")->capture_default_str();
    shadow_cmd->add_option("--ell", cfg.ell, "Shadow level")->capture_default_str();
    common(shadow_cmd);

    auto bound = app.add_subcommand("bound", "Lovasz form of the Kruskal-Katona bound");
    bound->add_option("--m", cfg.m, "Family size")->required();
    bound->add_option("--k", cfg.k, "Uniformity")->capture_default_str();
    bound->add_option("--ell", cfg.ell, "Shadow level")->capture_default_str();
    common(bound);

    auto transform = app.add_subcommand("transform", "Clique regularization rewrite with property checks");
    transform->add_option("--graph", cfg.graph, "graph6 string, or file with graph6 or adjacency list")->required();
    transform->add_option("--a1", cfg.a1, "Ordered clique A1, e.g. 0,1,2,3")->required();
    transform->add_option("--a2", cfg.a2, "Clique A2 (defaults to A1)");
    common(transform);

    auto peel_cmd = app.add_subcommand("peel", "Iterative clique peeling trace");
    peel_cmd->add_option("--graph", cfg.graph, "graph6 string or file")->required();
    peel_cmd->add_option("--t", cfg.t, "Integer t")->required();
    peel_cmd->add_option("--cliques", cfg.cliques, "Clique family as '0,1,2;3,4,5' (default: derived from the graph)");
    common(peel_cmd);

    auto construct = app.add_subcommand("construct", "Build a named graph");
    construct->add_option("--matched-clique", cfg.matched_clique, "K_{m+2} minus a perfect matching, m even");
    construct->add_flag("--disjoint-cliques", cfg.disjoint_cliques, "n/(t+1) disjoint copies of K_{t+1}");
    construct->add_flag("--counterexample", cfg.counterexample, "Matched-clique block for real t, with the inequality check");
    construct->add_option("--n", cfg.n, "Number of vertices");
    construct->add_option("--t", cfg.t, "Clique parameter t");
    common(construct);

    auto verify = app.add_subcommand("verify", "Run every diagnostic check on a graph");
    verify->add_option("--graph", cfg.graph, "graph6 string or file")->required();
    verify->add_option("--t", cfg.t, "Clique parameter t")->required();
    common(verify);

    auto bounds = app.add_subcommand("bounds", "Constants and bound formulas for t");
    bounds->add_option("--t", cfg.t, "Clique parameter t")->required();
    bounds->add_option("--lambda", cfg.lambda, "Initial maximizer degree for decay bounds");
    bounds->add_option("--f", cfg.f_values, "Values of f for the interval bound");
    common(bounds);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*search)
            return cmd_search(cfg);
        if (*oracle)
            return cmd_oracle(cfg);
        if (*shadow_cmd)
            return cmd_shadow(cfg);
        if (*bound)
            return cmd_bound(cfg);
        if (*transform)
            return cmd_transform(cfg);
        if (*peel_cmd)
            return cmd_peel(cfg);
        if (*construct)
            return cmd_construct(cfg);
        if (*verify)
            return cmd_verify(cfg);
        if (*bounds)
            return cmd_bounds(cfg);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
