#pragma once

#include <kk/rational.hpp>

#include <cstdint>

namespace kk {

/// The decay ratio 4/7 used by the peeling analysis.
auto alpha() -> Rational;

/// ceil(alpha * x) and ceil(2 * alpha * x) for integer x, computed exactly.
auto ceil_alpha(std::int64_t x) -> std::int64_t;
auto ceil_two_alpha(std::int64_t x) -> std::int64_t;

/// Excess-degree cutoff (sqrt(33) / (2 sqrt(928))) (t + 1).
auto theta(double t) -> double;

/// 1 + sqrt(928 / 33).
auto constant_c() -> double;

struct BoundsParams
{
    double t;
    Rational alpha;
    double theta;
    std::int64_t lambda;
    double c;
};

auto make_bounds_params(double t, std::int64_t lambda) -> BoundsParams;

/// Upper bound on the interval length b_i in terms of f = f_i(u_i):
/// 3t/4 for f = 1, 6 alpha f + 7 for 2 <= f <= 7, 4 alpha f + 5 for f >= 8.
auto b_upper_bound(std::int64_t f, double t) -> double;
auto b_upper_bound_exact(std::int64_t f, const Rational & t) -> Rational;

/// alpha^(j-1) * start + 3.
auto decay_bound(std::int64_t j, double start) -> double;

struct CliqueCountBounds
{
    double upper;
    double lower;
    double theta;
    double c;
};

/// Leading terms of the upper and lower estimates on the number of disjoint
/// low-excess cliques; remainder terms are not included.
auto clique_count_bounds(double t) -> CliqueCountBounds;

/// Largest excess-degree sum allowed in an extremal graph: (t + 1)^2 / 4.
auto excess_degree_bound(double t) -> double;

}
