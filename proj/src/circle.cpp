#include "rotnorm/circle.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>
#include <tuple>

namespace rotnorm::circle {

namespace {

template <typename S>
void check_grid(const std::vector<S>& times, const char* what) {
    if (times.size() < 2) throw Error(ErrorCode::InvalidInput, std::string(what) + " needs at least 2 samples");
    if (times.front() != 0 || times.back() != 1)
        throw Error(ErrorCode::InvalidInput, std::string(what) + " must start at 0 and end at 1");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i - 1] < times[i]))
            throw Error(ErrorCode::InvalidInput, std::string(what) + " times must increase strictly");
}

// Index j with grid[j] <= t < grid[j+1], clamped to the last segment.
template <typename S>
std::size_t segment_of(const std::vector<S>& grid, const S& t) {
    auto it = std::upper_bound(grid.begin(), grid.end(), t);
    std::size_t j = it == grid.begin() ? 0 : static_cast<std::size_t>(it - grid.begin()) - 1;
    return std::min(j, grid.size() - 2);
}

template <typename S>
S lerp(const S& x0, const S& y0, const S& x1, const S& y1, const S& x) {
    if (x == x0) return y0;
    if (x == x1) return y1;
    return y0 + (y1 - y0) * ((x - x0) / (x1 - x0));
}

template <typename S>
std::vector<S> merge_grids(const std::vector<S>& a, const std::vector<S>& b) {
    std::vector<S> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename S>
void sort_unique(std::vector<S>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---------------------------------------------------------------- paths

template <typename S>
BasicPLPath<S>::BasicPLPath(std::vector<S> times, std::vector<S> values)
    : times_(std::move(times)), values_(std::move(values)) {
    if (times_.size() != values_.size())
        throw Error(ErrorCode::InvalidInput, "path needs one value per breakpoint");
    check_grid(times_, "path");
}

template <typename S>
BasicPLPath<S> BasicPLPath<S>::delta(const S& sigma) {
    return BasicPLPath({S(0), S(1)}, {S(0), sigma});
}

template <typename S>
BasicPLPath<S> BasicPLPath<S>::constant(const S& value) {
    return BasicPLPath({S(0), S(1)}, {value, value});
}

template <typename S>
S BasicPLPath<S>::operator()(const S& t) const {
    if (t < 0 || t > 1) throw Error(ErrorCode::InvalidInput, "path parameter outside [0, 1]");
    const std::size_t j = segment_of(times_, t);
    return lerp(times_[j], values_[j], times_[j + 1], values_[j + 1], t);
}

template <typename S>
S rotation_angle(const BasicPLPath<S>& path) {
    return path.back() - path.front();
}

template <typename S>
BasicPLPath<S> concat(const BasicPLPath<S>& alpha, const BasicPLPath<S>& beta) {
    const S gap = alpha.back() - beta.front();
    if (!is_integer(gap)) throw Error(ErrorCode::FrameMismatch, "paths do not meet on the circle");
    const S half(1, 2);
    std::vector<S> times, values;
    for (std::size_t i = 0; i < alpha.times().size(); ++i) {
        times.push_back(alpha.times()[i] * half);
        values.push_back(alpha.values()[i]);
    }
    for (std::size_t i = 1; i < beta.times().size(); ++i) {
        times.push_back(beta.times()[i] * half + half);
        values.push_back(beta.values()[i] + gap);
    }
    return BasicPLPath<S>(std::move(times), std::move(values));
}

template <typename S>
BasicPLPath<S> reverse(const BasicPLPath<S>& path) {
    std::vector<S> times, values;
    for (std::size_t i = path.times().size(); i-- > 0;) {
        times.push_back(1 - path.times()[i]);
        values.push_back(path.values()[i]);
    }
    return BasicPLPath<S>(std::move(times), std::move(values));
}

template <typename S>
BasicPLPath<S> translate(const BasicPLPath<S>& path, const S& a) {
    std::vector<S> values = path.values();
    for (auto& v : values) v += a;
    return BasicPLPath<S>(path.times(), std::move(values));
}

template <typename S>
BasicPLPath<S> reparametrize(const BasicPLPath<S>& path, const BasicPLPath<S>& sigma) {
    if (sigma.front() != 0 || sigma.back() != 1)
        throw Error(ErrorCode::InvalidInput, "reparametrization must fix 0 and 1");
    const auto& st = sigma.times();
    const auto& sv = sigma.values();
    for (std::size_t i = 1; i < sv.size(); ++i)
        if (sv[i] < sv[i - 1]) throw Error(ErrorCode::InvalidInput, "reparametrization must be nondecreasing");

    // Breakpoints of gamma o sigma: sigma's own, plus preimages of gamma's.
    std::vector<S> times = st;
    for (std::size_t j = 0; j + 1 < st.size(); ++j) {
        if (sv[j] == sv[j + 1]) continue;
        for (const auto& u : path.times())
            if (sv[j] < u && u < sv[j + 1]) times.push_back(lerp(sv[j], st[j], sv[j + 1], st[j + 1], u));
    }
    sort_unique(times);
    std::vector<S> values;
    values.reserve(times.size());
    for (const auto& t : times) values.push_back(path(sigma(t)));
    return BasicPLPath<S>(std::move(times), std::move(values));
}

// --------------------------------------------------------- diffeomorphisms

namespace {

// Keeps only points where the slope changes, going around the period once,
// and returns the slope of the segment starting at each kept point.
template <typename S>
std::pair<std::vector<BasicBreakpoint<S>>, std::vector<S>> canonical(std::vector<BasicBreakpoint<S>> pts) {
    const std::size_t k = pts.size();
    if (k == 1) return {{{S(0), pts[0].y - pts[0].x}}, {S(1)}};
    std::vector<S> slope(k);
    for (std::size_t j = 0; j + 1 < k; ++j) slope[j] = (pts[j + 1].y - pts[j].y) / (pts[j + 1].x - pts[j].x);
    slope[k - 1] = (pts[0].y + 1 - pts[k - 1].y) / (pts[0].x + 1 - pts[k - 1].x);
    std::vector<BasicBreakpoint<S>> kept;
    std::vector<S> kept_slope;
    for (std::size_t j = 0; j < k; ++j) {
        if (slope[j] == slope[(j + k - 1) % k]) continue;
        kept.push_back(std::move(pts[j]));
        kept_slope.push_back(slope[j]);
    }
    if (kept.empty()) return {{{S(0), pts[0].y - pts[0].x}}, {S(1)}};
    return {std::move(kept), std::move(kept_slope)};
}

}  // namespace

template <typename S>
BasicPLCircleDiffeo<S>::BasicPLCircleDiffeo(std::vector<Point> breakpoints) {
    if (breakpoints.empty()) throw Error(ErrorCode::InvalidInput, "diffeomorphism needs a breakpoint");
    for (std::size_t j = 0; j < breakpoints.size(); ++j) {
        const auto& p = breakpoints[j];
        if (p.x < 0 || p.x >= 1) throw Error(ErrorCode::InvalidInput, "breakpoint x must lie in [0, 1)");
        if (j > 0 && !(breakpoints[j - 1].x < p.x && breakpoints[j - 1].y < p.y))
            throw Error(ErrorCode::InvalidInput, "breakpoints must increase strictly in x and in the lift");
    }
    if (!(breakpoints.back().y < breakpoints.front().y + 1))
        throw Error(ErrorCode::InvalidInput, "lift must satisfy f(x_0) + 1 > f(x_last)");
    std::tie(points_, slopes_) = canonical(std::move(breakpoints));
}

template <typename S>
BasicPLCircleDiffeo<S>::BasicPLCircleDiffeo(std::vector<Point> breakpoints, Trusted) {
    std::tie(points_, slopes_) = canonical(std::move(breakpoints));
}

template <typename S>
BasicPLCircleDiffeo<S> BasicPLCircleDiffeo<S>::identity() {
    return rotation(S(0));
}

template <typename S>
BasicPLCircleDiffeo<S> BasicPLCircleDiffeo<S>::rotation(const S& a) {
    return BasicPLCircleDiffeo({{S(0), a}});
}

template <typename S>
S BasicPLCircleDiffeo<S>::operator()(const S& x) const {
    const S n = integer_floor(x);
    const S u = x - n;
    // Last breakpoint at or before u; before the first one, the last
    // breakpoint of the previous period.
    auto it = std::upper_bound(points_.begin(), points_.end(), u,
                               [](const S& v, const Point& p) { return v < p.x; });
    if (it == points_.begin()) {
        const auto& last = points_.back();
        return last.y - 1 + slopes_.back() * (u - last.x + 1) + n;
    }
    const auto j = static_cast<std::size_t>(it - points_.begin()) - 1;
    return points_[j].y + slopes_[j] * (u - points_[j].x) + n;
}

template <typename S>
S BasicPLCircleDiffeo<S>::inverse_at(const S& y) const {
    const S n = integer_floor(y - points_.front().y);
    const S v = y - n;  // in [y_0, y_0 + 1)
    auto it = std::upper_bound(points_.begin(), points_.end(), v,
                               [](const S& w, const Point& p) { return w < p.y; });
    const auto j = static_cast<std::size_t>(it - points_.begin()) - 1;
    return points_[j].x + (v - points_[j].y) / slopes_[j] + n;
}

template <typename S>
BasicPLCircleDiffeo<S> compose(const BasicPLCircleDiffeo<S>& f, const BasicPLCircleDiffeo<S>& g) {
    // Candidate breakpoints come paired with their g-image, so only f is
    // evaluated: g's own breakpoints, and the preimages of f's breakpoints.
    std::vector<BasicBreakpoint<S>> pairs;
    pairs.reserve(f.breakpoints().size() + g.breakpoints().size());
    for (const auto& p : g.breakpoints()) pairs.push_back(p);
    const S g0 = g(S(0));
    for (const auto& p : f.breakpoints()) {
        // the unique translate of p.x inside g([0, 1)) = [g(0), g(0) + 1)
        S target = p.x + integer_ceil(g0 - p.x);
        S x = g.inverse_at(target);
        pairs.push_back({std::move(x), std::move(target)});
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    pairs.erase(std::unique(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.x == b.x; }),
                pairs.end());
    for (auto& p : pairs) p.y = f(p.y);
    return BasicPLCircleDiffeo<S>(std::move(pairs), typename BasicPLCircleDiffeo<S>::Trusted{});
}

template <typename S>
BasicPLCircleDiffeo<S> inverse(const BasicPLCircleDiffeo<S>& f) {
    std::vector<BasicBreakpoint<S>> pts;
    pts.reserve(f.breakpoints().size());
    for (const auto& p : f.breakpoints()) {
        const S shift = integer_floor(p.y);
        pts.push_back({p.y - shift, p.x - shift});
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
    return BasicPLCircleDiffeo<S>(std::move(pts), typename BasicPLCircleDiffeo<S>::Trusted{});
}

template <typename S>
BasicPLCircleDiffeo<S> interpolate(const BasicPLCircleDiffeo<S>& f, const BasicPLCircleDiffeo<S>& g, const S& s) {
    if (s < 0 || s > 1) throw Error(ErrorCode::InvalidInput, "interpolation weight outside [0, 1]");
    if (s == 0) return f;
    if (s == 1) return g;
    std::vector<S> xs;
    xs.reserve(f.breakpoints().size() + g.breakpoints().size());
    for (const auto& p : f.breakpoints()) xs.push_back(p.x);
    for (const auto& p : g.breakpoints()) xs.push_back(p.x);
    sort_unique(xs);
    const S r = 1 - s;
    std::vector<BasicBreakpoint<S>> pts;
    pts.reserve(xs.size());
    for (auto& x : xs) {
        S y = r * f(x) + s * g(x);
        pts.push_back({std::move(x), std::move(y)});
    }
    return BasicPLCircleDiffeo<S>(std::move(pts), typename BasicPLCircleDiffeo<S>::Trusted{});
}

template <typename S>
BasicPLCircleDiffeo<S> translate(const BasicPLCircleDiffeo<S>& f, const S& n) {
    if (!is_integer(n)) throw Error(ErrorCode::InvalidInput, "lift translation must be an integer");
    auto pts = f.breakpoints();
    for (auto& p : pts) p.y += n;
    return BasicPLCircleDiffeo<S>(std::move(pts));
}

template <typename S>
bool same_circle_map(const BasicPLCircleDiffeo<S>& f, const BasicPLCircleDiffeo<S>& g, S* shift) {
    const auto& a = f.breakpoints();
    const auto& b = g.breakpoints();
    if (a.size() != b.size()) return false;
    const S d = b.front().y - a.front().y;
    if (!is_integer(d)) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j].x != b[j].x || b[j].y - a[j].y != d) return false;
    if (shift) *shift = d;
    return true;
}

template <typename S>
BasicPLPath<S> apply(const BasicPLCircleDiffeo<S>& f, const BasicPLPath<S>& path) {
    std::vector<S> times = path.times();
    const auto& t = path.times();
    const auto& v = path.values();
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        if (v[j] == v[j + 1]) continue;
        const S lo = std::min(v[j], v[j + 1]);
        const S hi = std::max(v[j], v[j + 1]);
        for (const auto& p : f.breakpoints())
            for (S u = p.x + integer_ceil(lo - p.x); u <= hi; u += 1)
                times.push_back(lerp(v[j], t[j], v[j + 1], t[j + 1], u));
    }
    sort_unique(times);
    std::vector<S> values;
    values.reserve(times.size());
    for (const auto& s : times) values.push_back(f(path(s)));
    return BasicPLPath<S>(std::move(times), std::move(values));
}

// ---------------------------------------------------------------- isotopies

template <typename S>
BasicPLIsotopy<S>::BasicPLIsotopy(std::vector<S> times, std::vector<Diffeo> frames)
    : times_(std::move(times)), frames_(std::move(frames)) {
    if (times_.size() != frames_.size())
        throw Error(ErrorCode::InvalidInput, "isotopy needs one frame per time sample");
    check_grid(times_, "isotopy");
}

template <typename S>
BasicPLIsotopy<S> BasicPLIsotopy<S>::identity() {
    return constant(Diffeo::identity());
}

template <typename S>
BasicPLIsotopy<S> BasicPLIsotopy<S>::constant(const Diffeo& f) {
    return BasicPLIsotopy({S(0), S(1)}, {f, f});
}

template <typename S>
BasicPLIsotopy<S> BasicPLIsotopy<S>::rotation(const S& sigma) {
    return BasicPLIsotopy({S(0), S(1)}, {Diffeo::identity(), Diffeo::rotation(sigma)});
}

template <typename S>
BasicPLCircleDiffeo<S> BasicPLIsotopy<S>::frame_at(const S& t) const {
    if (t < 0 || t > 1) throw Error(ErrorCode::InvalidInput, "isotopy time outside [0, 1]");
    const std::size_t j = segment_of(times_, t);
    if (t == times_[j]) return frames_[j];
    if (t == times_[j + 1]) return frames_[j + 1];
    return interpolate(frames_[j], frames_[j + 1], (t - times_[j]) / (times_[j + 1] - times_[j]));
}

template <typename S>
BasicPLIsotopy<S> BasicPLIsotopy<S>::refine(const std::vector<S>& times) const {
    std::vector<S> sorted = times;
    sort_unique(sorted);
    const auto grid = merge_grids(times_, sorted);
    if (grid.size() == times_.size()) return *this;
    std::vector<Diffeo> frames;
    frames.reserve(grid.size());
    for (const auto& t : grid) frames.push_back(frame_at(t));
    return BasicPLIsotopy(grid, std::move(frames));
}

template <typename S>
BasicPLIsotopy<S> compose(const BasicPLIsotopy<S>& f, const BasicPLIsotopy<S>& g) {
    const auto grid = merge_grids(f.times(), g.times());
    std::vector<BasicPLCircleDiffeo<S>> frames;
    frames.reserve(grid.size());
    std::size_t i = 0, j = 0;
    for (const auto& t : grid) {
        // reuse stored frames where a sample already exists
        while (f.times()[i] < t) ++i;
        while (g.times()[j] < t) ++j;
        if (f.times()[i] == t && g.times()[j] == t)
            frames.push_back(compose(f.frames()[i], g.frames()[j]));
        else if (f.times()[i] == t)
            frames.push_back(compose(f.frames()[i], g.frame_at(t)));
        else
            frames.push_back(compose(f.frame_at(t), g.frames()[j]));
    }
    return BasicPLIsotopy<S>(grid, std::move(frames));
}

template <typename S>
BasicPLIsotopy<S> invert(const BasicPLIsotopy<S>& f) {
    std::vector<BasicPLCircleDiffeo<S>> frames;
    frames.reserve(f.frames().size());
    for (const auto& h : f.frames()) frames.push_back(inverse(h));
    return BasicPLIsotopy<S>(f.times(), std::move(frames));
}

template <typename S>
BasicPLIsotopy<S> concat(const BasicPLIsotopy<S>& f, const BasicPLIsotopy<S>& g) {
    S shift;
    if (!same_circle_map(f.end(), g.start(), &shift))
        throw Error(ErrorCode::FrameMismatch,
                    "last frame of the first isotopy differs from the first frame of the second");
    const S half(1, 2);
    std::vector<S> times;
    std::vector<BasicPLCircleDiffeo<S>> frames;
    for (std::size_t i = 0; i < f.times().size(); ++i) {
        times.push_back(f.times()[i] * half);
        frames.push_back(f.frames()[i]);
    }
    for (std::size_t i = 1; i < g.times().size(); ++i) {
        times.push_back(g.times()[i] * half + half);
        frames.push_back(translate(g.frames()[i], S(-shift)));
    }
    return BasicPLIsotopy<S>(std::move(times), std::move(frames));
}

template <typename S>
BasicPLIsotopy<S> reverse(const BasicPLIsotopy<S>& f) {
    std::vector<S> times;
    std::vector<BasicPLCircleDiffeo<S>> frames;
    for (std::size_t i = f.times().size(); i-- > 0;) {
        times.push_back(1 - f.times()[i]);
        frames.push_back(f.frames()[i]);
    }
    return BasicPLIsotopy<S>(std::move(times), std::move(frames));
}

template <typename S>
BasicPLIsotopy<S> commutator(const BasicPLIsotopy<S>& f, const BasicPLIsotopy<S>& g) {
    return compose(compose(f, g), compose(invert(f), invert(g)));
}

template <typename S>
BasicPLIsotopy<S> left_multiply(const BasicPLCircleDiffeo<S>& h, const BasicPLIsotopy<S>& f) {
    std::vector<BasicPLCircleDiffeo<S>> frames;
    frames.reserve(f.frames().size());
    for (const auto& a : f.frames()) frames.push_back(compose(h, a));
    return BasicPLIsotopy<S>(f.times(), std::move(frames));
}

template <typename S>
BasicPLIsotopy<S> right_multiply(const BasicPLIsotopy<S>& f, const BasicPLCircleDiffeo<S>& h) {
    std::vector<BasicPLCircleDiffeo<S>> frames;
    frames.reserve(f.frames().size());
    for (const auto& a : f.frames()) frames.push_back(compose(a, h));
    return BasicPLIsotopy<S>(f.times(), std::move(frames));
}

template <typename S>
BasicPLPath<S> trace(const BasicPLIsotopy<S>& f, const S& p) {
    // Between samples the lift is a convex combination of frame lifts, so the
    // trace is linear there and the samples are its breakpoints.
    std::vector<S> values;
    values.reserve(f.frames().size());
    for (const auto& h : f.frames()) values.push_back(h(p));
    return BasicPLPath<S>(f.times(), std::move(values));
}

template <typename S>
S mu(const BasicPLIsotopy<S>& f, const S& p) {
    return f.end()(p) - f.start()(p);
}

#define ROTNORM_INSTANTIATE(S)                                                                     \
    template class BasicPLPath<S>;                                                                 \
    template class BasicPLCircleDiffeo<S>;                                                         \
    template class BasicPLIsotopy<S>;                                                              \
    template S rotation_angle(const BasicPLPath<S>&);                                              \
    template BasicPLPath<S> concat(const BasicPLPath<S>&, const BasicPLPath<S>&);                  \
    template BasicPLPath<S> reverse(const BasicPLPath<S>&);                                        \
    template BasicPLPath<S> translate(const BasicPLPath<S>&, const S&);                            \
    template BasicPLPath<S> reparametrize(const BasicPLPath<S>&, const BasicPLPath<S>&);           \
    template BasicPLCircleDiffeo<S> compose(const BasicPLCircleDiffeo<S>&, const BasicPLCircleDiffeo<S>&); \
    template BasicPLCircleDiffeo<S> inverse(const BasicPLCircleDiffeo<S>&);                        \
    template BasicPLCircleDiffeo<S> interpolate(const BasicPLCircleDiffeo<S>&,                     \
                                                const BasicPLCircleDiffeo<S>&, const S&);          \
    template BasicPLCircleDiffeo<S> translate(const BasicPLCircleDiffeo<S>&, const S&);            \
    template bool same_circle_map(const BasicPLCircleDiffeo<S>&, const BasicPLCircleDiffeo<S>&, S*); \
    template BasicPLPath<S> apply(const BasicPLCircleDiffeo<S>&, const BasicPLPath<S>&);           \
    template BasicPLIsotopy<S> compose(const BasicPLIsotopy<S>&, const BasicPLIsotopy<S>&);        \
    template BasicPLIsotopy<S> invert(const BasicPLIsotopy<S>&);                                   \
    template BasicPLIsotopy<S> concat(const BasicPLIsotopy<S>&, const BasicPLIsotopy<S>&);         \
    template BasicPLIsotopy<S> reverse(const BasicPLIsotopy<S>&);                                  \
    template BasicPLIsotopy<S> commutator(const BasicPLIsotopy<S>&, const BasicPLIsotopy<S>&);     \
    template BasicPLIsotopy<S> left_multiply(const BasicPLCircleDiffeo<S>&, const BasicPLIsotopy<S>&); \
    template BasicPLIsotopy<S> right_multiply(const BasicPLIsotopy<S>&, const BasicPLCircleDiffeo<S>&); \
    template BasicPLPath<S> trace(const BasicPLIsotopy<S>&, const S&);                             \
    template S mu(const BasicPLIsotopy<S>&, const S&);

ROTNORM_INSTANTIATE(Rational)
ROTNORM_INSTANTIATE(Fraction)

#undef ROTNORM_INSTANTIATE

// ------------------------------------------------------------ multi-isotopies

MultiIsotopy::MultiIsotopy(std::vector<PLIsotopy> components, std::vector<Rational> basepoints)
    : basepoints_(std::move(basepoints)) {
    if (components.empty()) throw Error(ErrorCode::InvalidInput, "need at least one circle");
    if (components.size() != basepoints_.size())
        throw Error(ErrorCode::DimensionMismatch, "one basepoint per circle is required");
    for (const auto& p : basepoints_)
        if (p < 0 || p >= 1) throw Error(ErrorCode::InvalidInput, "basepoint must lie in [0, 1)");
    std::vector<Rational> grid;
    for (const auto& c : components) grid = merge_grids(grid, c.times());
    components_.reserve(components.size());
    for (const auto& c : components) components_.push_back(c.refine(grid));
}

MultiIsotopy MultiIsotopy::identity(int m) {
    if (m < 1) throw Error(ErrorCode::InvalidInput, "need at least one circle");
    return MultiIsotopy(std::vector<PLIsotopy>(static_cast<std::size_t>(m), PLIsotopy::identity()),
                        std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
}

namespace {

template <typename Op>
MultiIsotopy componentwise(const MultiIsotopy& f, const MultiIsotopy& g, Op op) {
    if (f.size() != g.size()) throw Error(ErrorCode::DimensionMismatch, "circle counts differ");
    if (f.basepoints() != g.basepoints()) throw Error(ErrorCode::InvalidInput, "basepoints differ");
    std::vector<PLIsotopy> out;
    for (std::size_t i = 0; i < f.components().size(); ++i) out.push_back(op(f.components()[i], g.components()[i]));
    return MultiIsotopy(std::move(out), f.basepoints());
}

}  // namespace

MultiIsotopy compose(const MultiIsotopy& f, const MultiIsotopy& g) {
    return componentwise(f, g, [](const PLIsotopy& a, const PLIsotopy& b) { return compose(a, b); });
}

MultiIsotopy invert(const MultiIsotopy& f) {
    std::vector<PLIsotopy> out;
    for (const auto& c : f.components()) out.push_back(invert(c));
    return MultiIsotopy(std::move(out), f.basepoints());
}

MultiIsotopy commutator(const MultiIsotopy& f, const MultiIsotopy& g) {
    return componentwise(f, g, [](const PLIsotopy& a, const PLIsotopy& b) { return commutator(a, b); });
}

RatVector nu(const MultiIsotopy& f) {
    RatVector out(f.size());
    for (int i = 0; i < f.size(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        out(i) = mu(f.components()[k], f.basepoints()[k]);
    }
    return out;
}

cvp::AffineCoset nu_hat(const MultiIsotopy& f, const lattice::IntLattice& a) {
    if (a.ambient_dim() != f.size())
        throw Error(ErrorCode::DimensionMismatch, "lattice dimension differs from the circle count");
    return cvp::AffineCoset(a, nu(f));
}

}  // namespace rotnorm::circle
