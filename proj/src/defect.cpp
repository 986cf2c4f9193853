#include "rotnorm/defect.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>
#include <limits>

namespace rotnorm::defect {

using circle::PLIsotopy;

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t r;
    do r = engine_(); while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

std::vector<std::int64_t> Sampler::distinct(std::int64_t lo, std::int64_t hi, std::size_t count) {
    // partial Fisher-Yates over the range
    std::vector<std::int64_t> pool;
    for (std::int64_t v = lo; v <= hi; ++v) pool.push_back(v);
    count = std::min(count, pool.size());
    for (std::size_t i = 0; i < count; ++i) {
        const auto j = static_cast<std::size_t>(uniform(static_cast<std::int64_t>(i), static_cast<std::int64_t>(pool.size()) - 1));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

template <typename S>
circle::BasicPLCircleDiffeo<S> random_diffeo(Sampler& rng) {
    const auto k = static_cast<std::size_t>(rng.uniform(2, 8));
    const auto xs = rng.distinct(0, kDenominator - 1, k);
    const auto ys = rng.distinct(0, kDenominator - 1, k);
    const std::int64_t offset = rng.uniform(-2 * kDenominator, 2 * kDenominator);
    std::vector<circle::BasicBreakpoint<S>> pts;
    for (std::size_t i = 0; i < k; ++i) pts.push_back({S(xs[i], kDenominator), S(ys[i] + offset, kDenominator)});
    return circle::BasicPLCircleDiffeo<S>(std::move(pts));
}

namespace {

template <typename S>
std::vector<S> random_times(Sampler& rng) {
    const auto samples = static_cast<std::size_t>(rng.uniform(2, 6));
    std::vector<S> times{S(0)};
    for (auto v : rng.distinct(1, kDenominator - 1, samples - 2)) times.emplace_back(v, kDenominator);
    times.emplace_back(1);
    return times;
}

}  // namespace

template <typename S>
circle::BasicPLIsotopy<S> random_isotopy(Sampler& rng) {
    auto times = random_times<S>(rng);
    std::vector<circle::BasicPLCircleDiffeo<S>> frames{circle::BasicPLCircleDiffeo<S>::identity()};
    for (std::size_t i = 1; i < times.size(); ++i) frames.push_back(random_diffeo<S>(rng));
    return circle::BasicPLIsotopy<S>(std::move(times), std::move(frames));
}

template <typename S>
circle::BasicPLIsotopy<S> random_loop(Sampler& rng) {
    auto times = random_times<S>(rng);
    std::vector<circle::BasicPLCircleDiffeo<S>> frames{circle::BasicPLCircleDiffeo<S>::identity()};
    for (std::size_t i = 1; i + 1 < times.size(); ++i) frames.push_back(random_diffeo<S>(rng));
    frames.push_back(circle::BasicPLCircleDiffeo<S>::rotation(S(rng.uniform(-3, 3))));
    return circle::BasicPLIsotopy<S>(std::move(times), std::move(frames));
}

template <typename S>
S random_point(Sampler& rng) {
    return S(rng.uniform(0, kDenominator - 1), kDenominator);
}

circle::MultiIsotopy random_multi_loop(Sampler& rng, int m) {
    std::vector<PLIsotopy> parts;
    std::vector<Rational> basepoints;
    for (int i = 0; i < m; ++i) {
        parts.push_back(random_loop(rng));
        basepoints.push_back(random_point(rng));
    }
    return circle::MultiIsotopy(std::move(parts), std::move(basepoints));
}

std::uint64_t DefectReport::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& c : checks) total += c.violations;
    return total;
}

DefectReport empty_report(std::uint64_t seed) {
    DefectReport r;
    r.seed = seed;
    r.checks = {
        {"left_multiply", "|mu(hF) - mu(F)| < 1", Rational(1), true, Rational(0), 0},
        {"right_multiply", "|mu(Fh) - mu(F)| < 1", Rational(1), true, Rational(0), 0},
        {"product", "|mu(FG) - mu(F) - mu(G)| < 1", Rational(1), true, Rational(0), 0},
        {"inverse_identity", "mu(F^-1) + mu(f^-1 F) = 0", Rational(0), false, Rational(0), 0},
        {"inverse", "|mu(F) + mu(F^-1)| < 1", Rational(1), true, Rational(0), 0},
        {"commutator", "|mu([F,G])| < 3", Rational(3), true, Rational(0), 0},
        {"basepoint", "|lambda(G_q) - lambda(G_p)| < 1", Rational(1), true, Rational(0), 0},
    };
    return r;
}

template <typename S>
void accumulate(DefectReport& report, const circle::BasicPLIsotopy<S>& f, const circle::BasicPLIsotopy<S>& g,
                const circle::BasicPLCircleDiffeo<S>& h, const S& p, const S& q) {
    using circle::mu;
    const S mu_f = mu(f, p);
    const S mu_g = mu(g, p);
    const auto f_inv = invert(f);
    const auto fg = compose(f, g);
    const S mu_f_inv = mu(f_inv, p);
    // [F,G] = (FG)(F^-1 G^-1), reusing the factors computed above
    const auto bracket = compose(fg, compose(f_inv, invert(g)));

    // Everything is evaluated before the report is touched, so an overflow
    // part way through leaves it unchanged.
    const S values[] = {
        mu(left_multiply(h, f), p) - mu_f,
        mu(right_multiply(f, h), p) - mu_f,
        mu(fg, p) - mu_f - mu_g,
        mu_f_inv + mu(left_multiply(inverse(f.end()), f), p),
        mu_f + mu_f_inv,
        mu(bracket, p),
        rotation_angle(trace(g, q)) - rotation_angle(trace(g, p)),
    };
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        auto& c = report.checks[i];
        const Rational a = abs(to_rational(values[i]));
        if (a > c.max) c.max = a;
        const bool ok = c.strict ? a < c.bound : a == 0;
        if (!ok) ++c.violations;
    }
    ++report.trials;
}

namespace {

template <typename S>
void run_trial(DefectReport& report, std::uint64_t sub_seed) {
    Sampler rng(sub_seed);
    const auto f = random_isotopy<S>(rng);
    const auto g = random_isotopy<S>(rng);
    const auto h = random_diffeo<S>(rng);
    const S p = random_point<S>(rng);
    const S q = random_point<S>(rng);
    accumulate(report, f, g, h, p, q);
}

}  // namespace

DefectReport defect_experiment(std::uint64_t seed, std::uint64_t trials) {
    if (trials == 0) throw Error(ErrorCode::InvalidInput, "trials must be at least 1");
    DefectReport report = empty_report(seed);
    for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t sub_seed = trial_seed(seed, i);
        try {
            run_trial<Fraction>(report, sub_seed);
        } catch (const FractionOverflow&) {
            // same draws, arbitrary precision
            run_trial<Rational>(report, sub_seed);
            ++report.wide_trials;
        }
    }
    return report;
}

#define ROTNORM_INSTANTIATE(S)                                                                  \
    template circle::BasicPLCircleDiffeo<S> random_diffeo<S>(Sampler&);                         \
    template circle::BasicPLIsotopy<S> random_isotopy<S>(Sampler&);                             \
    template circle::BasicPLIsotopy<S> random_loop<S>(Sampler&);                                \
    template S random_point<S>(Sampler&);                                                       \
    template void accumulate(DefectReport&, const circle::BasicPLIsotopy<S>&,                   \
                             const circle::BasicPLIsotopy<S>&, const circle::BasicPLCircleDiffeo<S>&, \
                             const S&, const S&);

ROTNORM_INSTANTIATE(Rational)
ROTNORM_INSTANTIATE(Fraction)

#undef ROTNORM_INSTANTIATE

}  // namespace rotnorm::defect
