#include <kk/bounds.hpp>

#include <cmath>
#include <stdexcept>

using std::int64_t;

namespace kk {

auto alpha() -> Rational
{
    return Rational(4, 7);
}

auto ceil_alpha(int64_t x) -> int64_t
{
    return (Rational(x) * alpha()).ceil();
}

auto ceil_two_alpha(int64_t x) -> int64_t
{
    return (Rational(2 * x) * alpha()).ceil();
}

auto theta(double t) -> double
{
    return std::sqrt(33.0) / (2.0 * std::sqrt(928.0)) * (t + 1.0);
}

auto constant_c() -> double
{
    return 1.0 + std::sqrt(928.0 / 33.0);
}

auto make_bounds_params(double t, int64_t lambda) -> BoundsParams
{
    if (! (t >= 2.0))
        throw std::invalid_argument("bounds: t must be at least 2");
    return {t, alpha(), theta(t), lambda, constant_c()};
}

auto b_upper_bound_exact(int64_t f, const Rational & t) -> Rational
{
    if (f < 1)
        throw std::invalid_argument("b_upper_bound: f must be at least 1");
    if (f == 1)
        return Rational(3, 4) * t;
    if (f <= 7)
        return Rational(6) * alpha() * Rational(f) + Rational(7);
    return Rational(4) * alpha() * Rational(f) + Rational(5);
}

auto b_upper_bound(int64_t f, double t) -> double
{
    if (f < 1)
        throw std::invalid_argument("b_upper_bound: f must be at least 1");
    if (f == 1)
        return 0.75 * t;
    return b_upper_bound_exact(f, Rational(0)).to_double();
}

auto decay_bound(int64_t j, double start) -> double
{
    if (j < 1)
        throw std::invalid_argument("decay_bound: j must be at least 1");
    return std::pow(4.0 / 7.0, static_cast<double>(j - 1)) * start + 3.0;
}

auto clique_count_bounds(double t) -> CliqueCountBounds
{
    if (! (t >= 2.0))
        throw std::invalid_argument("clique_count_bounds: t must be at least 2");
    auto th = theta(t);
    auto upper = 928.0 / 33.0 * th + 0.75 * t;
    auto lower = std::sqrt(928.0) / (2.0 * std::sqrt(33.0)) * (t + 1.0) + 0.75 * t;
    return {upper, lower, th, constant_c()};
}

auto excess_degree_bound(double t) -> double
{
    return (t + 1.0) * (t + 1.0) / 4.0;
}

}
