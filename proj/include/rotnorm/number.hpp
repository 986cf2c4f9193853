#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rotnorm {

// Exact scalars. Expression templates are off so that the types compose with
// Eigen and behave like plain values in `auto` contexts.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatVector = Vector<Rational>;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Largest integer not exceeding `r`.
inline Integer floor(const Rational& r) {
    Integer q, rem;
    boost::multiprecision::divide_qr(numer(r), denom(r), q, rem);
    if (rem < 0) --q;
    return q;
}

inline Integer ceil(const Rational& r) { return -floor(-r); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Integer abs(const Integer& r) { return r < 0 ? Integer(-r) : r; }

/// Floor division with a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
    return floor(Rational(a, b));
}

/// Parses "p", "-p", "p/q" (q != 0). Throws rotnorm::Error on malformed input.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals, e.g. "6/5,-5/2".
std::vector<Rational> parse_rational_list(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

RatVector to_rational(const IntVector& v);

/// max_i |v_i|; zero for an empty vector.
template <typename Scalar>
Scalar sup_norm(const Vector<Scalar>& v) {
    Scalar best = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        Scalar a = v(i) < 0 ? Scalar(-v(i)) : v(i);
        if (a > best) best = a;
    }
    return best;
}

/// Lexicographic comparison of equal-length vectors.
template <typename Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
        if (a(i) < b(i)) return true;
        if (b(i) < a(i)) return false;
    }
    return a.size() < b.size();
}

}  // namespace rotnorm
