#pragma once

// Integer normal forms over dense Eigen matrices. Everything here is
// templated on the integer scalar (int64_t, rotnorm::Integer, ...) and works
// on row-generator matrices: each row is one generator of a lattice.

#include "rotnorm/number.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace rotnorm {

/// Quotient rounded towards negative infinity, b != 0.
template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
    Scalar q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

template <typename Scalar>
Scalar abs_value(const Scalar& a) {
    return a < 0 ? Scalar(-a) : a;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Scalar r = a - floor_quotient(a, b) * b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

template <typename Scalar>
struct HermiteForm {
    Matrix<Scalar> basis;                  // rank x m, echelon, positive pivots
    std::vector<Eigen::Index> pivots;      // pivot column of each basis row, increasing
};

/// Row-style Hermite normal form: the nonzero rows of the result form an
/// echelon basis of the row lattice, pivots are positive and every entry
/// above a pivot lies in [0, pivot). Unique for a given lattice.
template <typename Scalar>
HermiteForm<Scalar> hermite_normal_form(const Matrix<Scalar>& generators) {
    Matrix<Scalar> a = generators;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        // Euclid down the column until one nonzero entry remains at `row`.
        for (;;) {
            Eigen::Index best = -1;
            for (Eigen::Index r = row; r < rows; ++r)
                if (a(r, col) != 0 && (best < 0 || abs_value(a(r, col)) < abs_value(a(best, col))))
                    best = r;
            if (best < 0) break;
            if (best != row) a.row(row).swap(a.row(best));
            bool done = true;
            for (Eigen::Index r = row + 1; r < rows; ++r) {
                if (a(r, col) == 0) continue;
                const Scalar q = floor_quotient(a(r, col), a(row, col));
                a.row(r) -= q * a.row(row);
                if (a(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0) a.row(row) = -a.row(row);
        for (Eigen::Index r = 0; r < row; ++r) {
            const Scalar q = floor_quotient(a(r, col), a(row, col));
            if (q != 0) a.row(r) -= q * a.row(row);
        }
        pivots.push_back(col);
        ++row;
    }
    return {a.topRows(row), std::move(pivots)};
}

/// Nonzero diagonal of the Smith normal form, each dividing the next.
template <typename Scalar>
std::vector<Scalar> smith_invariant_factors(const Matrix<Scalar>& input) {
    Matrix<Scalar> a = input;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Scalar> factors;
    for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            Eigen::Index bi = -1, bj = -1;
            for (Eigen::Index i = t; i < rows; ++i)
                for (Eigen::Index j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (bi < 0 || abs_value(a(i, j)) < abs_value(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) return factors;
            a.row(t).swap(a.row(bi));
            a.col(t).swap(a.col(bj));
            bool clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                const Scalar q = floor_quotient(a(i, t), a(t, t));
                a.row(i) -= q * a.row(t);
                if (a(i, t) != 0) clean = false;
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                const Scalar q = floor_quotient(a(t, j), a(t, t));
                a.col(j) -= q * a.col(t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the whole remaining block.
            Eigen::Index bad = -1;
            for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (a(i, j) - floor_quotient(a(i, j), a(t, t)) * a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            a.row(t) += a.row(bad);
        }
        factors.push_back(abs_value(a(t, t)));
    }
    return factors;
}

/// Coordinates c with c * basis = v for an echelon basis, or nullopt when v
/// is outside the rational span.
template <typename Scalar>
std::optional<Vector<Rational>> echelon_coordinates(const Matrix<Scalar>& basis,
                                                     const std::vector<Eigen::Index>& pivots,
                                                     const Vector<Rational>& v) {
    Vector<Rational> residual = v;
    Vector<Rational> coeffs(basis.rows());
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
        const Eigen::Index p = pivots[static_cast<std::size_t>(i)];
        for (Eigen::Index j = 0; j < p; ++j)
            if (residual(j) != 0) return std::nullopt;
        coeffs(i) = residual(p) / Rational(basis(i, p));
        for (Eigen::Index j = p; j < basis.cols(); ++j) residual(j) -= coeffs(i) * Rational(basis(i, j));
    }
    for (Eigen::Index j = 0; j < residual.size(); ++j)
        if (residual(j) != 0) return std::nullopt;
    return coeffs;
}

}  // namespace rotnorm
