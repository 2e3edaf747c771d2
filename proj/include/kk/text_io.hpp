#pragma once

#include <kk/graph.hpp>
#include <kk/shadow.hpp>

#include <string>
#include <string_view>

namespace kk {

/// Family text: a header line "k n", then one member per line as
/// comma-separated labels. Blank lines and lines starting with '#' are skipped.
auto parse_family(std::string_view text) -> KFamily;
auto format_family(const KFamily & f) -> std::string;

/// Accepts graph6 (a single token) or an adjacency list: a first line holding
/// the order n, then lines "u: v w ...". Throws std::invalid_argument.
auto parse_graph(std::string_view text) -> Graph;
auto format_adjacency_list(const Graph & g) -> std::string;

/// Comma-separated vertex labels, e.g. "0,1,2".
auto parse_vertex_list(std::string_view text) -> std::vector<Vertex>;

}
