#pragma once

#include <kk/graph.hpp>

#include <string>
#include <string_view>

namespace kk {

/// Standard header-less graph6 encoding.
auto to_graph6(const Graph & g) -> std::string;

/// Strict decoder: rejects bad characters, wrong lengths and non-zero padding.
/// Throws std::invalid_argument on malformed input.
auto from_graph6(std::string_view text) -> Graph;

}
