#include "rotnorm/coset.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>
#include <queue>

namespace rotnorm::cvp {

RatVector reduce_offset(const IntLattice& lattice, const RatVector& x) {
    if (x.size() != lattice.ambient_dim())
        throw Error(ErrorCode::DimensionMismatch, "offset length differs from m");
    RatVector y = x;
    const auto& basis = lattice.basis();
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
        const Eigen::Index p = lattice.pivots()[static_cast<std::size_t>(i)];
        const Rational d(basis(i, p));
        // smallest c with y_p - c d <= d/2, which then also exceeds -d/2
        const Integer c = ceil(y(p) / d - Rational(1, 2));
        if (c == 0) continue;
        for (Eigen::Index j = p; j < y.size(); ++j) y(j) -= Rational(c) * Rational(basis(i, j));
    }
    return y;
}

AffineCoset::AffineCoset(IntLattice lattice, const RatVector& offset)
    : lattice_(std::move(lattice)), offset_(reduce_offset(lattice_, offset)) {}

bool AffineCoset::contains(const RatVector& y) const {
    if (y.size() != dim()) throw Error(ErrorCode::DimensionMismatch, "point length differs from m");
    const RatVector diff = y - offset_;
    IntVector v(diff.size());
    for (Eigen::Index i = 0; i < diff.size(); ++i) {
        if (denom(diff(i)) != 1) return false;
        v(i) = numer(diff(i));
    }
    return lattice::member(lattice_, v);
}

RatVector canonical_rep(const AffineCoset& z) {
    if (!z.lattice().full_rank())
        throw Error(ErrorCode::RankDeficient, "J_A representative needs rank = m");
    // For a full-rank echelon basis the pivot d_i divides k_i, so the reduced
    // offset already lies in prod (-d_i/2, d_i/2] which sits inside J_A.
    return z.offset();
}

namespace {

// Depth-first enumeration over the echelon basis. Coordinates left of the
// next pivot are final once the current coefficient is fixed, which gives
// exact pruning against the running bound.
class Enumerator {
public:
    Enumerator(const IntLattice& lattice, bool collect) : lattice_(lattice), collect_(collect) {}

    // A skewed echelon basis can push the offset far out along the last
    // pivot, so the search starts from a small cutoff and doubles it until
    // some point qualifies. The offset itself always does.
    void run(const RatVector& start) {
        const Rational cap = sup_norm(start);
        Rational cutoff = std::min(cap, Rational(1, 2));
        while (true) {
            best_ = cutoff;
            found_ = false;
            points_.clear();
            if (columns_ok(start, 0, first_pivot())) descend(start, 0);
            if (found_) return;
            cutoff = std::min(cap, 2 * cutoff);
        }
    }

    const Rational& best() const { return best_; }
    std::vector<RatVector>& points() { return points_; }

private:
    Eigen::Index first_pivot() const {
        return lattice_.rank() == 0 ? lattice_.ambient_dim() : lattice_.pivots().front();
    }

    Eigen::Index pivot_after(Eigen::Index level) const {
        return level + 1 < lattice_.rank() ? lattice_.pivots()[static_cast<std::size_t>(level + 1)]
                                            : lattice_.ambient_dim();
    }

    bool columns_ok(const RatVector& y, Eigen::Index from, Eigen::Index to) const {
        for (Eigen::Index j = from; j < to; ++j)
            if (abs(y(j)) > best_) return false;
        return true;
    }

    void leaf(const RatVector& y) {
        const Rational n = sup_norm(y);
        if (!found_ || n < best_) {
            best_ = n;
            found_ = true;
            points_.clear();
        }
        if (n == best_ && collect_) points_.push_back(y);
    }

    void descend(const RatVector& y, Eigen::Index level) {
        if (level == lattice_.rank()) {
            leaf(y);
            return;
        }
        const auto& basis = lattice_.basis();
        const Eigen::Index p = lattice_.pivots()[static_cast<std::size_t>(level)];
        const Rational d(basis(level, p));
        const Integer lo = ceil((-best_ - y(p)) / d);
        // best_ only shrinks, so the upper end is re-read every iteration.
        for (Integer c = lo; Rational(c) <= (best_ - y(p)) / d; ++c) {
            RatVector next = y;
            for (Eigen::Index j = p; j < next.size(); ++j) next(j) += Rational(c) * Rational(basis(level, j));
            if (!columns_ok(next, p, pivot_after(level))) continue;
            descend(next, level + 1);
        }
    }

    const IntLattice& lattice_;
    bool collect_;
    bool found_ = false;
    Rational best_;
    std::vector<RatVector> points_;
};

}  // namespace

NearestData theta(const AffineCoset& z) {
    Enumerator e(z.lattice(), true);
    e.run(z.offset());
    auto& pts = e.points();
    std::sort(pts.begin(), pts.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return {e.best(), std::move(pts)};
}

Rational theta_value(const AffineCoset& z) {
    Enumerator e(z.lattice(), false);
    e.run(z.offset());
    return e.best();
}

ThetaSup theta_sup(const IntLattice& lattice, const Rational& epsilon) {
    if (epsilon <= 0) throw Error(ErrorCode::InvalidInput, "epsilon must be positive");
    ThetaSup out;
    if (!lattice.full_rank()) {
        out.infinite = true;
        return out;
    }
    const auto info = lattice::quotient_info(lattice);
    const Rational half_k = Rational(*info.k) / 2;
    const int m = lattice.ambient_dim();
    if (m == 1) {
        out.lo = out.hi = half_k;
        return out;
    }

    // theta is A-periodic, so the echelon box prod [0, d_i) covers every
    // coset, and it is 1-Lipschitz for the sup norm, so a cell is bounded by
    // theta at its centre plus its widest half-width.
    auto eval = [&](const RatVector& x) { return theta_value(AffineCoset(lattice, x)); };
    struct Cell {
        RatVector centre;
        RatVector half;
        Rational upper;
    };
    auto widest = [](const RatVector& h) {
        Eigen::Index axis = 0;
        for (Eigen::Index i = 1; i < h.size(); ++i)
            if (h(i) > h(axis)) axis = i;
        return axis;
    };
    auto cmp = [](const Cell& a, const Cell& b) { return a.upper < b.upper; };
    std::priority_queue<Cell, std::vector<Cell>, decltype(cmp)> queue(cmp);

    RatVector half(m);
    for (int i = 0; i < m; ++i) half(i) = Rational(lattice.basis()(i, i)) / 2;
    Rational lo = 0;
    auto push = [&](RatVector centre, RatVector h) {
        const Rational t = eval(centre);
        lo = std::max(lo, t);
        Rational upper = t + h(widest(h));
        if (upper > half_k) upper = half_k;
        if (upper > lo) queue.push({std::move(centre), std::move(h), upper});
    };
    push(half, half);

    Rational hi = lo;
    while (!queue.empty()) {
        const Rational top = queue.top().upper;
        if (top <= lo + epsilon) {
            hi = top;
            break;
        }
        Cell cell = queue.top();
        queue.pop();
        const Eigen::Index axis = widest(cell.half);
        RatVector h = cell.half;
        h(axis) /= 2;
        for (int side : {-1, 1}) {
            RatVector c = cell.centre;
            c(axis) += side * h(axis);
            push(std::move(c), h);
        }
    }
    out.lo = lo;
    out.hi = std::max(lo, hi);
    return out;
}

}  // namespace rotnorm::cvp
