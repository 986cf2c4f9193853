#pragma once

// Piecewise-linear model of paths, diffeomorphisms and isotopies of the
// circle R/Z. Everything is stored through lifts to R with rational
// breakpoints, so composition, inversion and convex interpolation stay exact.
//
// The classes are templated on the scalar. The library instantiates them for
// Rational (arbitrary precision) and Fraction (int64, throws on overflow).

#include "rotnorm/coset.hpp"
#include "rotnorm/fraction.hpp"
#include "rotnorm/number.hpp"

#include <vector>

namespace rotnorm::circle {

/// Lift of a path I -> R/Z, linear between breakpoints.
template <typename Scalar>
class BasicPLPath {
public:
    BasicPLPath(std::vector<Scalar> times, std::vector<Scalar> values);

    /// delta_sigma: the lift t -> sigma t.
    static BasicPLPath delta(const Scalar& sigma);
    static BasicPLPath constant(const Scalar& value);

    const std::vector<Scalar>& times() const noexcept { return times_; }
    const std::vector<Scalar>& values() const noexcept { return values_; }
    const Scalar& front() const { return values_.front(); }
    const Scalar& back() const { return values_.back(); }
    Scalar operator()(const Scalar& t) const;

    friend bool operator==(const BasicPLPath&, const BasicPLPath&) = default;

private:
    std::vector<Scalar> times_;
    std::vector<Scalar> values_;
};

template <typename Scalar>
struct BasicBreakpoint {
    Scalar x;  // in [0, 1)
    Scalar y;  // lift value at x
    friend bool operator==(const BasicBreakpoint&, const BasicBreakpoint&) = default;
};

/// An orientation-preserving PL homeomorphism of the circle, stored through a
/// lift on one period and extended by f(x + 1) = f(x) + 1. The breakpoint list
/// is canonical: exactly the slope changes in [0, 1), or the single point
/// (0, f(0)) for a rotation.
template <typename Scalar>
class BasicPLCircleDiffeo {
public:
    using Point = BasicBreakpoint<Scalar>;

    explicit BasicPLCircleDiffeo(std::vector<Point> breakpoints);

    static BasicPLCircleDiffeo identity();
    /// x -> x + a.
    static BasicPLCircleDiffeo rotation(const Scalar& a);

    Scalar operator()(const Scalar& x) const;
    Scalar inverse_at(const Scalar& y) const;

    const std::vector<Point>& breakpoints() const noexcept { return points_; }

    friend bool operator==(const BasicPLCircleDiffeo& a, const BasicPLCircleDiffeo& b) {
        return a.points_ == b.points_;
    }

private:
    struct Trusted {};
    BasicPLCircleDiffeo(std::vector<Point> breakpoints, Trusted);

    template <typename S>
    friend BasicPLCircleDiffeo<S> compose(const BasicPLCircleDiffeo<S>&, const BasicPLCircleDiffeo<S>&);
    template <typename S>
    friend BasicPLCircleDiffeo<S> inverse(const BasicPLCircleDiffeo<S>&);
    template <typename S>
    friend BasicPLCircleDiffeo<S> interpolate(const BasicPLCircleDiffeo<S>&, const BasicPLCircleDiffeo<S>&, const S&);

    std::vector<Point> points_;
    std::vector<Scalar> slopes_;  // slope of the segment starting at each breakpoint
};

/// An isotopy sampled at 0 = t_0 < ... < t_N = 1. Between samples the lift
/// is the convex combination of the neighbouring frame lifts, so the whole
/// family of lifts is continuous in t by construction.
template <typename Scalar>
class BasicPLIsotopy {
public:
    using Diffeo = BasicPLCircleDiffeo<Scalar>;

    BasicPLIsotopy(std::vector<Scalar> times, std::vector<Diffeo> frames);

    static BasicPLIsotopy identity();
    static BasicPLIsotopy constant(const Diffeo& f);
    /// t -> rotation by sigma t.
    static BasicPLIsotopy rotation(const Scalar& sigma);

    const std::vector<Scalar>& times() const noexcept { return times_; }
    const std::vector<Diffeo>& frames() const noexcept { return frames_; }
    const Diffeo& start() const { return frames_.front(); }
    const Diffeo& end() const { return frames_.back(); }

    Diffeo frame_at(const Scalar& t) const;
    /// Same isotopy, sampled on the union of its grid and `times`.
    BasicPLIsotopy refine(const std::vector<Scalar>& times) const;

    friend bool operator==(const BasicPLIsotopy&, const BasicPLIsotopy&) = default;

private:
    std::vector<Scalar> times_;
    std::vector<Diffeo> frames_;
};

using PLPath = BasicPLPath<Rational>;
using Breakpoint = BasicBreakpoint<Rational>;
using PLCircleDiffeo = BasicPLCircleDiffeo<Rational>;
using PLIsotopy = BasicPLIsotopy<Rational>;

// ------------------------------------------------------------------ paths

/// lambda(gamma) = lift(1) - lift(0).
template <typename S>
S rotation_angle(const BasicPLPath<S>& path);

/// alpha * beta on [0, 1/2] and [1/2, 1]; beta's lift is shifted by the
/// integer matching alpha(1). Throws FrameMismatch if alpha(1) != beta(0) on the circle.
template <typename S>
BasicPLPath<S> concat(const BasicPLPath<S>& alpha, const BasicPLPath<S>& beta);
/// t -> gamma(1 - t).
template <typename S>
BasicPLPath<S> reverse(const BasicPLPath<S>& path);
/// Pointwise translation of the lift by a.
template <typename S>
BasicPLPath<S> translate(const BasicPLPath<S>& path, const S& a);
/// gamma o sigma for a nondecreasing PL sigma : I -> I with sigma(0) = 0, sigma(1) = 1.
template <typename S>
BasicPLPath<S> reparametrize(const BasicPLPath<S>& path, const BasicPLPath<S>& sigma);

// -------------------------------------------------------- diffeomorphisms

/// Lift of f o g.
template <typename S>
BasicPLCircleDiffeo<S> compose(const BasicPLCircleDiffeo<S>& f, const BasicPLCircleDiffeo<S>& g);
template <typename S>
BasicPLCircleDiffeo<S> inverse(const BasicPLCircleDiffeo<S>& f);
/// (1 - s) f + s g, 0 <= s <= 1.
template <typename S>
BasicPLCircleDiffeo<S> interpolate(const BasicPLCircleDiffeo<S>& f, const BasicPLCircleDiffeo<S>& g, const S& s);
/// f + n for an integer n.
template <typename S>
BasicPLCircleDiffeo<S> translate(const BasicPLCircleDiffeo<S>& f, const S& n);
/// True when g = f + n for an integer n, i.e. both lifts cover one circle map.
/// Stores n through `shift` when given.
template <typename S>
bool same_circle_map(const BasicPLCircleDiffeo<S>& f, const BasicPLCircleDiffeo<S>& g, S* shift = nullptr);

/// Lift of f o gamma.
template <typename S>
BasicPLPath<S> apply(const BasicPLCircleDiffeo<S>& f, const BasicPLPath<S>& path);

// --------------------------------------------------------------- isotopies

/// (F G)_t = F_t G_t on the merged grid.
template <typename S>
BasicPLIsotopy<S> compose(const BasicPLIsotopy<S>& f, const BasicPLIsotopy<S>& g);
/// (F^-1)_t = (F_t)^-1.
template <typename S>
BasicPLIsotopy<S> invert(const BasicPLIsotopy<S>& f);
/// F * G: F on [0,1/2], G on [1/2,1]. Throws FrameMismatch unless F_1 = G_0 on the circle.
template <typename S>
BasicPLIsotopy<S> concat(const BasicPLIsotopy<S>& f, const BasicPLIsotopy<S>& g);
/// t -> F_{1-t}.
template <typename S>
BasicPLIsotopy<S> reverse(const BasicPLIsotopy<S>& f);
/// F G F^-1 G^-1.
template <typename S>
BasicPLIsotopy<S> commutator(const BasicPLIsotopy<S>& f, const BasicPLIsotopy<S>& g);
/// (hF)_t = h F_t.
template <typename S>
BasicPLIsotopy<S> left_multiply(const BasicPLCircleDiffeo<S>& h, const BasicPLIsotopy<S>& f);
/// (Fh)_t = F_t h.
template <typename S>
BasicPLIsotopy<S> right_multiply(const BasicPLIsotopy<S>& f, const BasicPLCircleDiffeo<S>& h);

/// The path t -> F_t(p) through the lifted frames.
template <typename S>
BasicPLPath<S> trace(const BasicPLIsotopy<S>& f, const S& p);

/// mu_p(F) = lambda(F_p).
template <typename S>
S mu(const BasicPLIsotopy<S>& f, const S& p);

// --------------------------------------------------------- several circles

/// One isotopy per circle, all on a common time grid, with a basepoint per circle.
class MultiIsotopy {
public:
    MultiIsotopy(std::vector<PLIsotopy> components, std::vector<Rational> basepoints);

    static MultiIsotopy identity(int m);

    int size() const noexcept { return static_cast<int>(components_.size()); }
    const std::vector<PLIsotopy>& components() const noexcept { return components_; }
    const std::vector<Rational>& basepoints() const noexcept { return basepoints_; }

private:
    std::vector<PLIsotopy> components_;
    std::vector<Rational> basepoints_;
};

MultiIsotopy compose(const MultiIsotopy& f, const MultiIsotopy& g);
MultiIsotopy invert(const MultiIsotopy& f);
MultiIsotopy commutator(const MultiIsotopy& f, const MultiIsotopy& g);

/// nu(F) = (mu_{p_i}(F_i))_i.
RatVector nu(const MultiIsotopy& f);

/// The coset nu(F) + A representing nu-hat of the endpoint diffeomorphism.
cvp::AffineCoset nu_hat(const MultiIsotopy& f, const lattice::IntLattice& a);

}  // namespace rotnorm::circle
