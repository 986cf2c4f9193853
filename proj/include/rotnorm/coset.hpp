#pragma once

#include "rotnorm/lattice.hpp"
#include "rotnorm/number.hpp"

#include <vector>

namespace rotnorm::cvp {

using lattice::IntLattice;

/// The affine lattice x + A in R^m with rational offset. The stored offset is
/// the representative obtained by reducing each pivot coordinate into
/// (-d/2, d/2] against the echelon basis, so equal cosets store equal offsets.
class AffineCoset {
public:
    AffineCoset(IntLattice lattice, const RatVector& offset);

    const IntLattice& lattice() const noexcept { return lattice_; }
    const RatVector& offset() const noexcept { return offset_; }
    int dim() const noexcept { return lattice_.ambient_dim(); }

    /// y - offset lies in A.
    bool contains(const RatVector& y) const;

    friend bool operator==(const AffineCoset& a, const AffineCoset& b) {
        return a.lattice_ == b.lattice_ && a.offset_ == b.offset_;
    }

private:
    IntLattice lattice_;
    RatVector offset_;
};

/// Reduces x against the echelon basis: pivot coordinate p_i of the result
/// lies in (-d_i/2, d_i/2], processed in basis order.
RatVector reduce_offset(const IntLattice& lattice, const RatVector& x);

/// The representative of z in J_A = prod (-k_i/2, k_i/2]. Throws RankDeficient.
RatVector canonical_rep(const AffineCoset& z);

struct NearestData {
    Rational theta;                  // min ||y||_inf over y in z
    std::vector<RatVector> points;   // every y in z attaining theta, lexicographic
};

NearestData theta(const AffineCoset& z);

/// theta alone; skips collecting the attaining set.
Rational theta_value(const AffineCoset& z);

struct ThetaSup {
    bool infinite = false;
    Rational lo, hi;   // certified lo <= sup_z theta_z <= hi
    bool exact() const { return !infinite && lo == hi; }
};

/// sup of theta_z over all cosets. Infinite when rank < m, exactly k/2 for
/// m = 1, otherwise an interval of width <= epsilon inside [0, k/2].
ThetaSup theta_sup(const IntLattice& lattice, const Rational& epsilon);

}  // namespace rotnorm::cvp
