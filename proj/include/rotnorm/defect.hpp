#pragma once

// Seeded random PL isotopies and the randomized check of the quasimorphism
// inequalities for mu.

#include "rotnorm/circle.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rotnorm::defect {

/// Small deterministic sampler. Only the raw mt19937_64 stream is used so the
/// output does not depend on the standard library's distribution classes.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi] by rejection.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    /// `count` distinct sorted integers from [lo, hi].
    std::vector<std::int64_t> distinct(std::int64_t lo, std::int64_t hi, std::size_t count);

private:
    std::mt19937_64 engine_;
};

/// Sub-seed for trial `index` of a run started from `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Breakpoint coordinates are multiples of 1/kDenominator.
inline constexpr std::int64_t kDenominator = 24;

/// 2 to 8 breakpoints, lift offset in [-2, 2].
template <typename S = Rational>
circle::BasicPLCircleDiffeo<S> random_diffeo(Sampler& rng);
/// Isotopy from the identity through 2 to 6 samples.
template <typename S = Rational>
circle::BasicPLIsotopy<S> random_isotopy(Sampler& rng);
/// Isotopy from the identity back to the identity, winding |n| <= 3 times.
template <typename S = Rational>
circle::BasicPLIsotopy<S> random_loop(Sampler& rng);
template <typename S = Rational>
S random_point(Sampler& rng);
circle::MultiIsotopy random_multi_loop(Sampler& rng, int m);

struct CheckResult {
    std::string id;
    std::string statement;
    Rational bound;          // strict bound, or 0 for an identity
    bool strict = true;      // false: the quantity must equal 0
    Rational max;            // largest |quantity| seen
    std::uint64_t violations = 0;
};

struct DefectReport {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<CheckResult> checks;
    std::uint64_t wide_trials = 0;  // trials redone in arbitrary precision after an int64 overflow
    std::uint64_t total_violations() const;
};

/// Draws `trials` pairs F, G from the seed and evaluates every inequality.
/// Throws InvalidInput when trials == 0.
DefectReport defect_experiment(std::uint64_t seed, std::uint64_t trials);

/// The same checks on one given triple (F, G, h) with basepoints p, q.
template <typename S>
void accumulate(DefectReport& report, const circle::BasicPLIsotopy<S>& f, const circle::BasicPLIsotopy<S>& g,
                const circle::BasicPLCircleDiffeo<S>& h, const S& p, const S& q);

/// Empty report with the fixed list of checks.
DefectReport empty_report(std::uint64_t seed);

}  // namespace rotnorm::defect
