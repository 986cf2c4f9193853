#pragma once

#include "rotnorm/hermite.hpp"
#include "rotnorm/number.hpp"

#include <optional>
#include <vector>

namespace rotnorm::lattice {

inline constexpr int kMaxAmbientDim = 8;

/// A sublattice A < Z^m, stored with its canonical Hermite basis.
class IntLattice {
public:
    IntLattice() = default;

    int ambient_dim() const noexcept { return ambient_dim_; }
    int rank() const noexcept { return static_cast<int>(basis_.rows()); }
    bool full_rank() const noexcept { return rank() == ambient_dim_; }

    /// rank x m echelon basis, one lattice vector per row.
    const IntMatrix& basis() const noexcept { return basis_; }
    const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }
    const std::vector<IntVector>& generators() const noexcept { return generators_; }

    friend bool operator==(const IntLattice& a, const IntLattice& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
    }

    friend IntLattice normalize(int, const std::vector<IntVector>&);

private:
    int ambient_dim_ = 0;
    IntMatrix basis_;
    std::vector<Eigen::Index> pivots_;
    std::vector<IntVector> generators_;
};

/// Throws DimensionMismatch for wrong-length generators, InvalidInput when m
/// is outside [1, 8].
IntLattice normalize(int m, const std::vector<IntVector>& generators);

/// The full lattice Z^m and the zero lattice.
IntLattice standard_lattice(int m);
IntLattice zero_lattice(int m);

bool member(const IntLattice& lattice, const IntVector& v);

/// Coordinates of v in the echelon basis, nullopt outside the rational span.
std::optional<RatVector> basis_coordinates(const IntLattice& lattice, const RatVector& v);

/// Order of an element of the quotient; nullopt stands for infinity.
using Order = std::optional<Integer>;

std::string order_to_string(const Order& k);

/// 2 floor(k/2) + 3.
Integer k_hat(const Integer& k);

struct QuotientInfo {
    int rank = 0;
    std::vector<Order> orders;             // k_i = ord [e_i] in Z^m / A
    Order k;                               // max_i k_i
    std::optional<Integer> k_hat;          // only when rank = m
    std::vector<Integer> invariant_factors;  // Smith diagonal of the basis
    std::optional<Integer> index;          // |Z^m / A| when finite
    std::optional<Integer> cyclic_generator;  // m = 1 only: A = kZ with k >= 0
    // True when some k_i was assigned infinity because rank < m.
    bool extension = false;
};

QuotientInfo quotient_info(const IntLattice& lattice);

/// A nonzero primitive integer c with c . a = 0 on A; deterministic.
/// Throws FullRank when rank = m.
IntVector kernel_functional(const IntLattice& lattice);

}  // namespace rotnorm::lattice
