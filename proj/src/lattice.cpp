#include "rotnorm/lattice.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>

namespace rotnorm::lattice {

IntLattice normalize(int m, const std::vector<IntVector>& generators) {
    if (m < 1 || m > kMaxAmbientDim)
        throw Error(ErrorCode::InvalidInput, "ambient dimension must lie in [1, 8]");
    IntMatrix rows(static_cast<Eigen::Index>(generators.size()), m);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != m)
            throw Error(ErrorCode::DimensionMismatch, "generator length differs from m");
        rows.row(static_cast<Eigen::Index>(i)) = generators[i].transpose();
    }
    auto hnf = hermite_normal_form(rows);
    IntLattice out;
    out.ambient_dim_ = m;
    out.basis_ = std::move(hnf.basis);
    out.pivots_ = std::move(hnf.pivots);
    out.generators_ = generators;
    return out;
}

IntLattice standard_lattice(int m) {
    std::vector<IntVector> gens;
    for (int i = 0; i < m; ++i) gens.push_back(IntVector::Unit(m, i));
    return normalize(m, gens);
}

IntLattice zero_lattice(int m) { return normalize(m, {}); }

std::optional<RatVector> basis_coordinates(const IntLattice& lattice, const RatVector& v) {
    if (v.size() != lattice.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "vector length differs from m");
    return echelon_coordinates(lattice.basis(), lattice.pivots(), v);
}

bool member(const IntLattice& lattice, const IntVector& v) {
    const auto coords = basis_coordinates(lattice, to_rational(v));
    if (!coords) return false;
    for (Eigen::Index i = 0; i < coords->size(); ++i)
        if (denom((*coords)(i)) != 1) return false;
    return true;
}

std::string order_to_string(const Order& k) { return k ? k->str() : "inf"; }

Integer k_hat(const Integer& k) { return 2 * floor_div(k, 2) + 3; }

QuotientInfo quotient_info(const IntLattice& lattice) {
    const int m = lattice.ambient_dim();
    QuotientInfo info;
    info.rank = lattice.rank();
    info.invariant_factors = smith_invariant_factors(lattice.basis());

    // t e_i in A iff t times the basis coordinates of e_i are integral, so the
    // order is the lcm of their denominators.
    for (int i = 0; i < m; ++i) {
        const auto coords = basis_coordinates(lattice, to_rational(IntVector::Unit(m, i)));
        if (!coords) {
            info.orders.emplace_back(std::nullopt);
            continue;
        }
        Integer order = 1;
        for (Eigen::Index j = 0; j < coords->size(); ++j)
            order = boost::multiprecision::lcm(order, denom((*coords)(j)));
        info.orders.emplace_back(order);
    }

    const bool any_infinite = std::any_of(info.orders.begin(), info.orders.end(),
                                          [](const Order& k) { return !k.has_value(); });
    if (!any_infinite) {
        Integer k = 0;
        for (const auto& ki : info.orders) k = std::max(k, *ki);
        info.k = k;
        info.k_hat = lattice::k_hat(k);
        Integer index = 1;
        for (const auto& d : info.invariant_factors) index *= d;
        info.index = index;
    }
    info.extension = any_infinite;
    if (m == 1) info.cyclic_generator = lattice.rank() == 0 ? Integer(0) : lattice.basis()(0, 0);
    return info;
}

IntVector kernel_functional(const IntLattice& lattice) {
    const int m = lattice.ambient_dim();
    if (lattice.full_rank())
        throw Error(ErrorCode::FullRank, "kernel functional needs rank < m");
    const auto& basis = lattice.basis();
    const auto& pivots = lattice.pivots();

    Eigen::Index free_col = 0;
    while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;

    RatVector c = RatVector::Zero(m);
    c(free_col) = 1;
    for (Eigen::Index i = basis.rows() - 1; i >= 0; --i) {
        const Eigen::Index p = pivots[static_cast<std::size_t>(i)];
        Rational s = 0;
        for (Eigen::Index j = p + 1; j < m; ++j) s += Rational(basis(i, j)) * c(j);
        c(p) = -s / Rational(basis(i, p));
    }

    Integer scale = 1;
    for (Eigen::Index j = 0; j < m; ++j) scale = boost::multiprecision::lcm(scale, denom(c(j)));
    IntVector out(m);
    Integer g = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
        out(j) = numer(c(j) * Rational(scale));
        g = gcd_value(g, out(j));
    }
    for (Eigen::Index j = 0; j < m; ++j) out(j) /= g;
    for (Eigen::Index j = 0; j < m; ++j) {
        if (out(j) == 0) continue;
        if (out(j) < 0) out = -out;
        break;
    }
    return out;
}

}  // namespace rotnorm::lattice
