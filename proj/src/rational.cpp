#include <kk/rational.hpp>

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

using std::int64_t;

namespace kk {

namespace
{
    auto gcd_wide(__int128 a, __int128 b) -> __int128
    {
        if (a < 0)
            a = -a;
        if (b < 0)
            b = -b;
        while (b != 0) {
            auto r = a % b;
            a = b;
            b = r;
        }
        return a;
    }
}

Rational::Rational(int64_t num, int64_t den)
{
    *this = from_wide(num, den);
}

auto Rational::from_wide(__int128 num, __int128 den) -> Rational
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    auto g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    constexpr auto lo = std::numeric_limits<int64_t>::min();
    constexpr auto hi = std::numeric_limits<int64_t>::max();
    if (num < lo || num > hi || den > hi)
        throw std::overflow_error("rational overflow");
    Rational r;
    r._num = static_cast<int64_t>(num);
    r._den = static_cast<int64_t>(den);
    return r;
}

auto Rational::parse(std::string_view text) -> Rational
{
    if (text.empty())
        throw std::invalid_argument("empty rational");

    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        auto a = parse(text.substr(0, slash));
        auto b = parse(text.substr(slash + 1));
        if (! a.is_integer() || ! b.is_integer())
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        return a / b;
    }

    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        ++pos;
    }
    __int128 num = 0, den = 1;
    bool seen_digit = false, seen_point = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c == '.' && ! seen_point) {
            seen_point = true;
            continue;
        }
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_point)
            den *= 10;
        if (num > (__int128{1} << 100) || den > (__int128{1} << 100))
            throw std::overflow_error("rational literal too long");
    }
    if (! seen_digit)
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    return from_wide(negative ? -num : num, den);
}

auto Rational::approximate(double x, int64_t max_den) -> Rational
{
    if (! std::isfinite(x))
        throw std::invalid_argument("cannot approximate a non-finite value");

    // convergents of the continued fraction of x
    int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double rest = x;
    for (int step = 0; step < 64; ++step) {
        auto a = static_cast<int64_t>(std::floor(rest));
        auto q2 = a * q1 + q0;
        if (q2 > max_den)
            break;
        auto p2 = a * p1 + p0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        auto frac = rest - static_cast<double>(a);
        if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) < 1e-15 * std::max(1.0, std::abs(x)) || frac < 1e-15)
            break;
        rest = 1.0 / frac;
    }
    return Rational(p1, q1);
}

auto Rational::floor() const -> int64_t
{
    auto q = _num / _den;
    if (_num % _den != 0 && _num < 0)
        --q;
    return q;
}

auto Rational::ceil() const -> int64_t
{
    auto q = _num / _den;
    if (_num % _den != 0 && _num > 0)
        ++q;
    return q;
}

auto Rational::to_string() const -> std::string
{
    if (_den == 1)
        return std::to_string(_num);
    return std::to_string(_num) + "/" + std::to_string(_den);
}

auto operator+(const Rational & a, const Rational & b) -> Rational
{
    return Rational::from_wide(__int128{a._num} * b._den + __int128{b._num} * a._den, __int128{a._den} * b._den);
}

auto operator-(const Rational & a, const Rational & b) -> Rational
{
    return Rational::from_wide(__int128{a._num} * b._den - __int128{b._num} * a._den, __int128{a._den} * b._den);
}

auto operator*(const Rational & a, const Rational & b) -> Rational
{
    return Rational::from_wide(__int128{a._num} * b._num, __int128{a._den} * b._den);
}

auto operator/(const Rational & a, const Rational & b) -> Rational
{
    if (b._num == 0)
        throw std::domain_error("rational division by zero");
    return Rational::from_wide(__int128{a._num} * b._den, __int128{a._den} * b._num);
}

auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
{
    return __int128{a._num} * b._den <=> __int128{b._num} * a._den;
}

}
