#pragma once

#include <kk/graph.hpp>

#include <string>
#include <vector>

namespace kk {

/// Relabelling that maps g onto its canonical representative: two graphs are
/// isomorphic iff their canonical forms are equal.
auto canonical_labelling(const Graph & g) -> std::vector<Vertex>;

auto canonical_form(const Graph & g) -> Graph;

/// graph6 of canonical_form(g); used as the isomorphism-class key.
auto canonical_graph6(const Graph & g) -> std::string;

}
