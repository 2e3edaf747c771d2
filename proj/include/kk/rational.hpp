#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kk {

/// Exact rational with 64-bit numerator and positive denominator, kept in
/// lowest terms. Intermediate products use 128-bit arithmetic; results that do
/// not fit throw std::overflow_error.
class Rational
{
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    /// Parses "3", "-7/2" or a decimal such as "3.25" exactly.
    static auto parse(std::string_view text) -> Rational;

    /// Closest rational with denominator at most max_den (continued fractions).
    static auto approximate(double x, std::int64_t max_den = 1000000) -> Rational;

    auto num() const -> std::int64_t { return _num; }
    auto den() const -> std::int64_t { return _den; }

    auto is_integer() const -> bool { return _den == 1; }
    auto floor() const -> std::int64_t;
    auto ceil() const -> std::int64_t;
    auto to_double() const -> double { return static_cast<double>(_num) / static_cast<double>(_den); }
    auto to_string() const -> std::string;

    friend auto operator+(const Rational & a, const Rational & b) -> Rational;
    friend auto operator-(const Rational & a, const Rational & b) -> Rational;
    friend auto operator*(const Rational & a, const Rational & b) -> Rational;
    friend auto operator/(const Rational & a, const Rational & b) -> Rational;

    friend auto operator==(const Rational &, const Rational &) -> bool = default;
    friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering;

private:
    static auto from_wide(__int128 num, __int128 den) -> Rational;

    std::int64_t _num = 0;
    std::int64_t _den = 1;
};

}
