#pragma once

// A reduced fraction of two int64 values. Every operation either returns the
// exact result or throws FractionOverflow, so callers can fall back to the
// arbitrary-precision Rational without ever seeing a rounded value.

#include "rotnorm/number.hpp"

#include <compare>
#include <cstdint>
#include <utility>
#include <stdexcept>
#include <type_traits>

namespace rotnorm {

struct FractionOverflow : std::overflow_error {
    FractionOverflow() : std::overflow_error("fraction overflow") {}
};

class Fraction {
public:
    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t n) : num_(n) {}  // NOLINT: implicit like Rational
    Fraction(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("zero denominator");
        if (d < 0) {
            n = negate(n);
            d = negate(d);
        }
        const auto g = static_cast<std::int64_t>(gcd(magnitude(n), static_cast<std::uint64_t>(d)));
        num_ = n / g;
        den_ = d / g;
    }

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    Rational to_rational() const { return Rational(num_, den_); }

    friend Fraction operator-(const Fraction& a) { return raw(negate(a.num_), a.den_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        if (a.den_ == 1 && b.den_ == 1) return raw(add(a.num_, b.num_), 1);
        const auto g = static_cast<std::int64_t>(gcd(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_)));
        const std::int64_t s = a.den_ / g;
        std::int64_t u, v, t;
        if (__builtin_mul_overflow(a.num_, b.den_ / g, &u) || __builtin_mul_overflow(b.num_, s, &v) ||
            __builtin_add_overflow(u, v, &t) || t == INT64_MIN)
            throw FractionOverflow();
        if (t == 0) return Fraction();
        if (g == 1) return raw(t, mul(s, b.den_));
        const auto g2 = static_cast<std::int64_t>(gcd(magnitude(t), static_cast<std::uint64_t>(g)));
        return raw(t / g2, mul(s, b.den_ / g2));
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        if (a.num_ == 0 || b.num_ == 0) return Fraction();
        const auto g1 = static_cast<std::int64_t>(gcd(magnitude(a.num_), static_cast<std::uint64_t>(b.den_)));
        const auto g2 = static_cast<std::int64_t>(gcd(magnitude(b.num_), static_cast<std::uint64_t>(a.den_)));
        return raw(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
    }

    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        const Fraction inv = b.num_ < 0 ? raw(negate(b.den_), negate(b.num_)) : raw(b.den_, b.num_);
        return a * inv;
    }

    Fraction& operator+=(const Fraction& b) { return *this = *this + b; }
    Fraction& operator-=(const Fraction& b) { return *this = *this - b; }
    Fraction& operator*=(const Fraction& b) { return *this = *this * b; }
    Fraction& operator/=(const Fraction& b) { return *this = *this / b; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
    }

    /// Largest integer not exceeding the value.
    friend Fraction floor(const Fraction& a) {
        std::int64_t q = a.num_ / a.den_;
        if (a.num_ % a.den_ != 0 && a.num_ < 0) --q;
        return Fraction(q);
    }
    friend Fraction ceil(const Fraction& a) { return -floor(-a); }
    friend Fraction abs(const Fraction& a) { return a.num_ < 0 ? -a : a; }
    friend bool is_integer(const Fraction& a) { return a.den_ == 1; }

private:
    static Fraction raw(std::int64_t n, std::int64_t d) {
        Fraction f;
        f.num_ = n;
        f.den_ = d;
        return f;
    }
    static std::int64_t negate(std::int64_t v) {
        if (v == INT64_MIN) throw FractionOverflow();
        return -v;
    }
    static std::uint64_t magnitude(std::int64_t v) {
        return v < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r) || r == INT64_MIN) throw FractionOverflow();
        return r;
    }
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r) || r == INT64_MIN) throw FractionOverflow();
        return r;
    }
    // Binary gcd; gcd(0, b) = b.
    static std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        const int shift = __builtin_ctzll(a | b);
        a >>= __builtin_ctzll(a);
        do {
            b >>= __builtin_ctzll(b);
            if (a > b) std::swap(a, b);
            b -= a;
        } while (b != 0);
        return a << shift;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Scalar helpers shared by code templated over Rational and Fraction.
inline bool is_integer(const Rational& r) { return denom(r) == 1; }
inline Rational to_rational(const Rational& r) { return r; }
inline Rational to_rational(const Fraction& f) { return f.to_rational(); }

template <typename Scalar>
Scalar integer_floor(const Scalar& s) {
    if constexpr (std::is_same_v<Scalar, Rational>)
        return Rational(floor(s));
    else
        return floor(s);
}

template <typename Scalar>
Scalar integer_ceil(const Scalar& s) {
    return -integer_floor<Scalar>(-s);
}

template <typename Scalar>
Scalar from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) {
    return r;
}

template <>
inline Fraction from_rational<Fraction>(const Rational& r) {
    const Integer n = numer(r), d = denom(r);
    if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX) throw FractionOverflow();
    return Fraction(n.convert_to<std::int64_t>(), d.convert_to<std::int64_t>());
}

}  // namespace rotnorm
