#pragma once

/**
 * @file integer.hpp
 * @brief Exact integer types and the small set of arithmetic helpers the
 *        rest of the library is written against.
 *
 * Every algorithm in isoprod is a template over an integer type satisfying
 * `exact_integer`. Two models ship with the library:
 *
 *  - `BigInt`   : arbitrary precision (boost::multiprecision::cpp_int).
 *  - `Checked64`: a 64-bit integer that throws std::overflow_error instead
 *                 of wrapping. Used for the large desk-scale scans.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace isoprod {

using BigInt = boost::multiprecision::cpp_int;

class Checked64 {
public:
    constexpr Checked64() = default;
    template <std::integral I>
    constexpr Checked64(I v) : v_(narrow(v)) {}

    constexpr std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) overflow("addition");
        return from_raw(r);
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) overflow("subtraction");
        return from_raw(r);
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) overflow("multiplication");
        return from_raw(r);
    }
    // Truncating division, as for built-in integers.
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (b.v_ == 0) throw std::domain_error("Checked64: division by zero");
        if (a.v_ == kMin && b.v_ == -1) overflow("division");
        return from_raw(a.v_ / b.v_);
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v_ == 0) throw std::domain_error("Checked64: division by zero");
        if (b.v_ == -1) return from_raw(0);
        return from_raw(a.v_ % b.v_);
    }
    Checked64 operator-() const {
        if (v_ == kMin) overflow("negation");
        return from_raw(-v_);
    }
    Checked64& operator+=(Checked64 o) { return *this = *this + o; }
    Checked64& operator-=(Checked64 o) { return *this = *this - o; }
    Checked64& operator*=(Checked64 o) { return *this = *this * o; }
    Checked64& operator/=(Checked64 o) { return *this = *this / o; }
    Checked64& operator%=(Checked64 o) { return *this = *this % o; }
    Checked64& operator++() { return *this += 1; }
    Checked64& operator--() { return *this -= 1; }

    friend constexpr bool operator==(Checked64, Checked64) = default;
    friend constexpr auto operator<=>(Checked64, Checked64) = default;

    friend std::ostream& operator<<(std::ostream& os, Checked64 x) { return os << x.v_; }

private:
    static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

    template <std::integral I>
    static constexpr std::int64_t narrow(I v) {
        if (!std::in_range<std::int64_t>(v)) overflow("conversion");
        return static_cast<std::int64_t>(v);
    }
    static constexpr Checked64 from_raw(std::int64_t v) {
        Checked64 c;
        c.v_ = v;
        return c;
    }
    [[noreturn]] static void overflow(const char* op) {
        throw std::overflow_error(std::string("Checked64: overflow in ") + op);
    }

    std::int64_t v_ = 0;
};

template <typename T>
concept exact_integer = std::regular<T> && std::totally_ordered<T> && requires(T a, T b) {
    { T(0) } -> std::same_as<T>;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { a % b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
};

// Helpers ------------------------------------------------------------------

template <exact_integer Int>
Int iabs(const Int& x) {
    return x < Int(0) ? Int(-x) : x;
}

/// Non-negative gcd; igcd(0, 0) = 0.
template <exact_integer Int>
Int igcd(Int a, Int b) {
    a = iabs(a);
    b = iabs(b);
    while (b != Int(0)) {
        Int r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

template <exact_integer Int>
Int igcd(const Int& a, const Int& b, const Int& c) {
    return igcd(igcd(a, b), c);
}

/// Quotient rounded toward negative infinity. b != 0.
template <exact_integer Int>
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != Int(0) && ((r < Int(0)) != (b < Int(0)))) q = q - Int(1);
    return q;
}

/// Quotient rounded toward positive infinity. b != 0.
template <exact_integer Int>
Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(Int(-a), b);
}

/// Floor of the square root of n >= 0.
template <exact_integer Int>
Int isqrt(const Int& n) {
    if (n < Int(0)) throw std::domain_error("isqrt of a negative number");
    if (n < Int(2)) return n;
    // Newton from above: start at a power of two exceeding sqrt(n).
    Int x(1);
    while (x <= n / x) x = x * Int(2);
    for (;;) {
        Int y = (x + n / x) / Int(2);
        if (y >= x) return x;
        x = std::move(y);
    }
}

inline Checked64 isqrt(const Checked64& n) {
    if (n < Checked64(0)) throw std::domain_error("isqrt of a negative number");
    auto u = static_cast<std::uint64_t>(n.value());
    // Candidate from the hardware sqrt, corrected in exact arithmetic.
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(u)));
    while (r > 0 && (r > 0xFFFFFFFFull || r * r > u)) --r;
    while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= u) ++r;
    return Checked64(static_cast<std::int64_t>(r));
}

template <exact_integer Int>
bool is_perfect_square(const Int& n) {
    if (n < Int(0)) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline std::string to_decimal(const BigInt& x) { return x.str(); }
inline std::string to_decimal(const Checked64& x) { return std::to_string(x.value()); }

/// Lossy conversion for display and loop bounds only.
inline long long to_ll(const Checked64& x) { return x.value(); }
inline long long to_ll(const BigInt& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + x.str());
    return static_cast<long long>(x);
}

/// Parses an optionally signed decimal integer. Anything else (empty input,
/// spaces, trailing garbage, out-of-range for Checked64) throws
/// std::invalid_argument.
template <exact_integer Int>
Int parse_integer(std::string_view text);

namespace detail {
inline bool is_decimal_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}
}  // namespace detail

template <>
inline BigInt parse_integer<BigInt>(std::string_view text) {
    if (!detail::is_decimal_literal(text))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    return BigInt(std::string(text));
}

template <>
inline Checked64 parse_integer<Checked64>(std::string_view text) {
    if (!detail::is_decimal_literal(text))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    if (text.front() == '+') text.remove_prefix(1);
    std::int64_t v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("integer out of 64-bit range: '" + std::string(text) + "'");
    return Checked64(v);
}

}  // namespace isoprod
