#include <kk/serialize.hpp>

#include <cmath>
#include <fstream>
#include <stdexcept>

using nlohmann::json;
using std::string;

namespace kk {

namespace
{
    auto set_json(const VertexSet & s) -> json
    {
        return s.to_vector();
    }

    auto check_json(const PropertyCheck & c) -> json
    {
        json j{{"passed", c.passed}};
        if (! c.passed)
            j["witness"] = c.witness;
        return j;
    }
}

auto rational_to_json(const Rational & r) -> json
{
    if (r.is_integer())
        return r.num();
    return r.to_double();
}

auto to_json(const SearchResult & r) -> json
{
    json j;
    j["n"] = r.n;
    j["t"] = rational_to_json(r.t);
    if (r.min_edges)
        j["min_edges"] = *r.min_edges;
    else
        j["min_edges"] = r.certified ? json("infeasible") : json(nullptr);
    j["witnesses"] = r.witnesses;
    j["witness_classes"] = r.witness_classes;
    j["certified"] = r.certified;
    j["optimality"] = r.optimality;
    j["nodes"] = r.nodes;
    json optima = json::array();
    for (auto & [s, c] : r.component_optima)
        optima.push_back({{"order", s}, {"min_edges", c ? json(*c) : json("infeasible")}});
    j["connected_optima"] = optima;
    return j;
}

auto to_json(const PeelingTrace & trace) -> json
{
    json steps = json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        auto & s = trace.steps[i];
        steps.push_back({{"i", i + 1}, {"u", s.u}, {"f", s.f}, {"a", s.a}, {"class", set_json(s.cls)}, {"alive", s.alive.size()},
            {"removed", s.removed}, {"b", trace.b[i]}});
    }
    json j;
    j["t"] = trace.t;
    json cliques = json::array();
    for (auto & c : trace.family.cliques)
        cliques.push_back(set_json(c));
    j["cliques"] = cliques;
    j["xi"] = trace.xi();
    j["lambda"] = trace.lambda();
    j["steps"] = steps;
    j["window"] = set_json(trace.window);
    j["z"] = set_json(trace.z);
    json without = json::array(), with = json::array();
    for (auto i : trace.classes_without_z)
        without.push_back(i + 1);
    for (auto i : trace.classes_with_z)
        with.push_back(i + 1);
    j["classes_without_z"] = without;
    j["classes_with_z"] = with;
    j["b_prime"] = trace.b_prime();
    return j;
}

auto to_json(const DiagnosticsReport & report) -> json
{
    json checks = json::array();
    for (auto & c : report.checks)
        checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return {{"graph", report.graph}, {"t", rational_to_json(report.t)}, {"checks", checks}};
}

auto to_json(const RegularizeReport & report) -> json
{
    return {{"edge_non_increase", check_json(report.edge_non_increase)}, {"edge_confinement", check_json(report.edge_confinement)},
        {"clique_shifting", check_json(report.clique_shifting)}, {"triangle_condition", check_json(report.triangle_condition)},
        {"edges_decreased", report.edges_decreased}};
}

auto to_json(const CounterexampleReport & report) -> json
{
    json j{{"t", rational_to_json(report.t)}, {"ceil_t", report.ceil_t}, {"required", report.required.to_double()},
        {"per_vertex", report.per_vertex.to_double()}, {"condition_holds", report.condition_holds},
        {"block_feasible", report.block_feasible}, {"block_has_clique_component", report.block_has_clique_component},
        {"block_order", report.block_order}, {"block_edges", report.block_edges}, {"counterexample", report.is_counterexample()}};
    if (report.clique_edges)
        j["disjoint_clique_edges"] = *report.clique_edges;
    return j;
}

ResultsCache::ResultsCache(string path) :
    _path(std::move(path))
{
}

auto ResultsCache::record(const SearchResult & r) -> json
{
    json j;
    j["n"] = r.n;
    j["t"] = rational_to_json(r.t);
    j["min_edges"] = r.min_edges ? json(*r.min_edges) : json("infeasible");
    j["witnesses"] = r.witnesses;
    j["certified"] = r.certified;
    j["nodes"] = r.nodes;
    j["witness_classes"] = r.witness_classes;
    return j;
}

auto ResultsCache::parse_record(const json & j) -> SearchResult
{
    SearchResult r;
    r.n = j.at("n").get<int>();
    auto t = j.at("t");
    r.t = t.is_number_integer() ? Rational(t.get<std::int64_t>()) : Rational::approximate(t.get<double>());
    auto & m = j.at("min_edges");
    if (m.is_number_integer())
        r.min_edges = m.get<std::int64_t>();
    else if (! (m.is_string() && m.get<string>() == "infeasible"))
        throw std::invalid_argument("cache record has malformed min_edges");
    r.witnesses = j.at("witnesses").get<std::vector<string>>();
    r.certified = j.at("certified").get<bool>();
    r.nodes = j.at("nodes").get<std::uint64_t>();
    r.witness_classes = j.value("witness_classes", static_cast<std::int64_t>(r.witnesses.size()));
    return r;
}

auto ResultsCache::lookup(int n, const Rational & t) const -> std::optional<SearchResult>
{
    std::ifstream in(_path);
    if (! in)
        return std::nullopt;
    std::optional<SearchResult> found;
    string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || ! j.is_object())
            continue;
        try {
            auto r = parse_record(j);
            if (r.n == n && r.certified && std::abs(r.t.to_double() - t.to_double()) <= 1e-12)
                found = r;
        }
        catch (const std::exception &) {
            continue;
        }
    }
    if (found)
        found->t = t;
    return found;
}

void ResultsCache::append(const SearchResult & r) const
{
    std::ofstream out(_path, std::ios::app);
    if (! out)
        throw std::runtime_error("cannot open cache file " + _path);
    out << record(r).dump() << '\n';
}

}
