#pragma once

// Rule engine turning coset norms, lattice data and caller-asserted manifold
// hypotheses into certified bounds on commutator-type norms and diameters.

#include "rotnorm/coset.hpp"
#include "rotnorm/lattice.hpp"
#include "rotnorm/number.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rotnorm::bounds {

enum class Regularity { Smooth, FiniteR };
enum class Topology { Closed, Open };

/// Topological hypotheses are asserted by the caller; nothing here checks them.
struct ManifoldContext {
    int n = 3;
    int m = 1;
    bool connected = true;
    Topology closed_or_open = Topology::Closed;
    Regularity regularity = Regularity::Smooth;
    bool assumption_P = false;

    /// Throws InvalidInput for n < 2 or m < 1. Forces assumption_P for smooth maps.
    static ManifoldContext make(int n, int m, bool connected, Topology topology, Regularity regularity,
                                bool assumption_P);
    bool perfectness() const noexcept { return assumption_P || regularity == Regularity::Smooth; }
};

std::string_view topology_name(Topology t);
std::string_view regularity_name(Regularity r);

/// An upper or lower bound: a number, "finite" without a number, or infinity.
struct Bound {
    enum class Kind { Value, Finite, Infinite };
    Kind kind = Kind::Infinite;
    Rational value;

    static Bound of(const Rational& v) { return {Kind::Value, v}; }
    static Bound finite() { return {Kind::Finite, Rational(0)}; }
    static Bound infinite() { return {Kind::Infinite, Rational(0)}; }

    bool is_value() const noexcept { return kind == Kind::Value; }
    bool is_infinite() const noexcept { return kind == Kind::Infinite; }

    friend bool operator==(const Bound& a, const Bound& b) {
        return a.kind == b.kind && (a.kind != Kind::Value || a.value == b.value);
    }
};

/// "finite" absorbs numbers, infinity absorbs everything.
Bound operator+(const Bound& a, const Bound& b);
Bound operator*(const Rational& c, const Bound& b);
std::string to_string(const Bound& b);

enum class Quantity {
    cl_f,
    clb_f,
    cl_modG_f,
    clb_modG_f,
    zeta,
    eta,
    cld,
    clbd,
    cld_G,
    clbd_G,
    clbd_modG,
};

inline constexpr std::array kQuantities{
    Quantity::cl_f, Quantity::clb_f, Quantity::cl_modG_f, Quantity::clb_modG_f, Quantity::zeta, Quantity::eta,
    Quantity::cld,  Quantity::clbd,  Quantity::cld_G,     Quantity::clbd_G,     Quantity::clbd_modG,
};

std::string_view quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view name);

struct Entry {
    Bound lower = Bound::of(Rational(0));  // Value or Infinite
    Bound upper = Bound::infinite();
    std::vector<std::string> rules;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Quantities without an entry are unconstrained: lower 0, upper infinity.
class BoundLedger {
public:
    const std::map<Quantity, Entry>& entries() const noexcept { return entries_; }
    bool has(Quantity q) const { return entries_.count(q) != 0; }
    Entry get(Quantity q) const;

    /// Records the bound when it is tighter than the current one; returns whether it was.
    bool tighten_upper(Quantity q, const Bound& upper, const std::string& rule);
    bool tighten_lower(Quantity q, const Bound& lower, const std::string& rule);
    /// Adds a rule to an existing entry.
    void cite(Quantity q, const std::string& rule);

    friend bool operator==(const BoundLedger&, const BoundLedger&) = default;

private:
    std::map<Quantity, Entry> entries_;
};

/// (theta + D) / (C + D). Throws ZeroDenominator when C + D <= 0 and
/// InvalidInput when theta < 0.
Rational lower_cl(const Rational& theta, const Rational& d, const Rational& c);

/// 2 (floor(theta) + 1) + 1: the least integer l > theta gives the bound 2l + 1.
Integer upper_clb_modG(const Rational& theta);

/// Diameter bounds from the lattice data. Pass theta_sup for m >= 2 to get the
/// general lower bound on cld; for m = 1 it is exact and computed here.
BoundLedger diameter_ledger(const ManifoldContext& ctx, const lattice::QuotientInfo& q,
                            const std::optional<cvp::ThetaSup>& theta_sup = std::nullopt);

/// Bounds for one element f with coset norm theta_f, closed under the relations.
BoundLedger element_ledger(const ManifoldContext& ctx, const Rational& theta);

/// Fixed point of the norm relations, tightening uppers and raising lowers.
/// Throws InconsistentLedger when a lower bound ends above an upper bound.
BoundLedger relation_close(BoundLedger ledger);

/// Tightest bounds of both ledgers, closed under the relations.
BoundLedger merge(const BoundLedger& a, const BoundLedger& b);

enum class Status { Bounded, Unbounded, Unknown };
std::string_view status_name(Status s);

struct Verdict {
    Status status = Status::Unknown;
    std::vector<std::string> justification;
};

/// Throws DimensionMismatch when a.ambient_dim() != ctx.m.
Verdict verdict(const ManifoldContext& ctx, const lattice::IntLattice& a);

}  // namespace rotnorm::bounds
