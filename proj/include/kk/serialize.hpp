#pragma once

#include <kk/constructions.hpp>
#include <kk/diagnostics.hpp>
#include <kk/search.hpp>
#include <kk/transform.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace kk {

auto rational_to_json(const Rational & r) -> nlohmann::json;

auto to_json(const SearchResult & r) -> nlohmann::json;
auto to_json(const PeelingTrace & trace) -> nlohmann::json;
auto to_json(const DiagnosticsReport & report) -> nlohmann::json;
auto to_json(const RegularizeReport & report) -> nlohmann::json;
auto to_json(const CounterexampleReport & report) -> nlohmann::json;

/// Append-only JSON-lines store of certified search results, keyed by (n, t).
class ResultsCache
{
public:
    explicit ResultsCache(std::string path);

    auto path() const -> const std::string & { return _path; }

    /// Latest certified record for (n, t), with t matched to 1e-12.
    auto lookup(int n, const Rational & t) const -> std::optional<SearchResult>;
    void append(const SearchResult & r) const;

    /// One cache line: {"n","t","min_edges","witnesses","certified","nodes"}.
    static auto record(const SearchResult & r) -> nlohmann::json;
    static auto parse_record(const nlohmann::json & j) -> SearchResult;

private:
    std::string _path;
};

}
