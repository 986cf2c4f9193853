#include "rotnorm/bounds.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>
#include <sstream>

namespace rotnorm::bounds {

ManifoldContext ManifoldContext::make(int n, int m, bool connected, Topology topology, Regularity regularity,
                                      bool assumption_P) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "manifold dimension must be at least 2");
    if (m < 1) throw Error(ErrorCode::InvalidInput, "circle count must be at least 1");
    ManifoldContext ctx;
    ctx.n = n;
    ctx.m = m;
    ctx.connected = connected;
    ctx.closed_or_open = topology;
    ctx.regularity = regularity;
    // smooth maps satisfy the perfectness assumption outright
    ctx.assumption_P = assumption_P || regularity == Regularity::Smooth;
    return ctx;
}

std::string_view topology_name(Topology t) { return t == Topology::Closed ? "closed" : "open"; }

std::string_view regularity_name(Regularity r) { return r == Regularity::Smooth ? "smooth" : "finite_r"; }

Bound operator+(const Bound& a, const Bound& b) {
    if (a.is_infinite() || b.is_infinite()) return Bound::infinite();
    if (a.is_value() && b.is_value()) return Bound::of(a.value + b.value);
    return Bound::finite();
}

Bound operator*(const Rational& c, const Bound& b) {
    if (b.is_value()) return Bound::of(c * b.value);
    if (c == 0) return Bound::of(Rational(0));
    return b;
}

std::string to_string(const Bound& b) {
    switch (b.kind) {
        case Bound::Kind::Value: return rotnorm::to_string(b.value);
        case Bound::Kind::Finite: return "finite";
        case Bound::Kind::Infinite: return "inf";
    }
    return "inf";
}

std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::cl_f: return "cl_f";
        case Quantity::clb_f: return "clb_f";
        case Quantity::cl_modG_f: return "cl_modG_f";
        case Quantity::clb_modG_f: return "clb_modG_f";
        case Quantity::zeta: return "zeta";
        case Quantity::eta: return "eta";
        case Quantity::cld: return "cld";
        case Quantity::clbd: return "clbd";
        case Quantity::cld_G: return "cld_G";
        case Quantity::clbd_G: return "clbd_G";
        case Quantity::clbd_modG: return "clbd_modG";
    }
    return "?";
}

std::optional<Quantity> parse_quantity(std::string_view name) {
    for (auto q : kQuantities)
        if (quantity_name(q) == name) return q;
    return std::nullopt;
}

Entry BoundLedger::get(Quantity q) const {
    auto it = entries_.find(q);
    return it == entries_.end() ? Entry{} : it->second;
}

namespace {

bool upper_tighter(const Bound& fresh, const Bound& old) {
    if (fresh.is_infinite()) return false;
    if (old.is_infinite()) return true;
    if (!fresh.is_value()) return false;
    return !old.is_value() || fresh.value < old.value;
}

bool lower_higher(const Bound& fresh, const Bound& old) {
    if (old.is_infinite()) return false;
    if (fresh.is_infinite()) return true;
    return fresh.is_value() && fresh.value > old.value;
}

void add_rule(std::vector<std::string>& rules, const std::string& rule) {
    if (std::find(rules.begin(), rules.end(), rule) == rules.end()) rules.push_back(rule);
}

}  // namespace

bool BoundLedger::tighten_upper(Quantity q, const Bound& upper, const std::string& rule) {
    Entry current = get(q);
    if (!upper_tighter(upper, current.upper)) return false;
    current.upper = upper;
    add_rule(current.rules, rule);
    entries_[q] = std::move(current);
    return true;
}

bool BoundLedger::tighten_lower(Quantity q, const Bound& lower, const std::string& rule) {
    if (lower.kind == Bound::Kind::Finite) throw Error(ErrorCode::InvalidInput, "a lower bound needs a value");
    Entry current = get(q);
    if (!lower_higher(lower, current.lower)) return false;
    current.lower = lower;
    add_rule(current.rules, rule);
    entries_[q] = std::move(current);
    return true;
}

void BoundLedger::cite(Quantity q, const std::string& rule) {
    auto it = entries_.find(q);
    if (it != entries_.end()) add_rule(it->second.rules, rule);
}

Rational lower_cl(const Rational& theta, const Rational& d, const Rational& c) {
    if (theta < 0) throw Error(ErrorCode::InvalidInput, "theta must be nonnegative");
    if (c + d <= 0) throw Error(ErrorCode::ZeroDenominator, "C + D must be positive");
    return (theta + d) / (c + d);
}

Integer upper_clb_modG(const Rational& theta) {
    if (theta < 0) throw Error(ErrorCode::InvalidInput, "theta must be nonnegative");
    const Integer ell = floor(theta) + 1;
    return 2 * ell + 1;
}

namespace {

using Q = Quantity;

// lhs <= sum coef * q
struct Relation {
    const char* id;
    Quantity lhs;
    std::vector<std::pair<Rational, Quantity>> terms;
};

const std::vector<Relation>& relations() {
    static const std::vector<Relation> list = {
        {"cl<=clb", Q::cl_f, {{1, Q::clb_f}}},
        {"clb<=2eta", Q::clb_f, {{2, Q::eta}}},
        {"zeta<=4clb", Q::zeta, {{4, Q::clb_f}}},
        {"cl<=cl_modG+cld_G", Q::cl_f, {{1, Q::cl_modG_f}, {1, Q::cld_G}}},
        {"clb<=clb_modG+clbd_G", Q::clb_f, {{1, Q::clb_modG_f}, {1, Q::clbd_G}}},
        {"cl_modG<=clb_modG", Q::cl_modG_f, {{1, Q::clb_modG_f}}},
        {"cl_modG<=cl", Q::cl_modG_f, {{1, Q::cl_f}}},
        {"clb_modG<=clb", Q::clb_modG_f, {{1, Q::clb_f}}},
        {"cl<=cld", Q::cl_f, {{1, Q::cld}}},
        {"clb<=clbd", Q::clb_f, {{1, Q::clbd}}},
        {"cld<=clbd", Q::cld, {{1, Q::clbd}}},
        {"cld_G<=clbd_G", Q::cld_G, {{1, Q::clbd_G}}},
        {"clb_modG<=clbd_modG", Q::clb_modG_f, {{1, Q::clbd_modG}}},
        {"cld<=clbd_modG+cld_G", Q::cld, {{1, Q::clbd_modG}, {1, Q::cld_G}}},
        {"clbd<=clbd_modG+clbd_G", Q::clbd, {{1, Q::clbd_modG}, {1, Q::clbd_G}}},
    };
    return list;
}

bool apply(BoundLedger& ledger, const Relation& rel) {
    bool changed = false;
    // upper(lhs) <= sum coef * upper(term)
    Bound sum = Bound::of(Rational(0));
    for (const auto& [c, q] : rel.terms) sum = sum + c * ledger.get(q).upper;
    changed |= ledger.tighten_upper(rel.lhs, sum, rel.id);

    // coef_j lower(term_j) >= lower(lhs) - sum_{i != j} coef_i upper(term_i)
    const Bound lhs_lower = ledger.get(rel.lhs).lower;
    for (std::size_t j = 0; j < rel.terms.size(); ++j) {
        Bound others = Bound::of(Rational(0));
        for (std::size_t i = 0; i < rel.terms.size(); ++i)
            if (i != j) others = others + rel.terms[i].first * ledger.get(rel.terms[i].second).upper;
        Bound raised;
        if (lhs_lower.is_infinite()) {
            if (others.is_infinite()) continue;
            raised = Bound::infinite();
        } else {
            if (!others.is_value()) continue;
            raised = Bound::of((lhs_lower.value - others.value) / rel.terms[j].first);
        }
        changed |= ledger.tighten_lower(rel.terms[j].second, raised, rel.id);
    }
    return changed;
}

void check_consistent(const BoundLedger& ledger) {
    for (const auto& [q, e] : ledger.entries()) {
        const bool bad = e.lower.is_infinite() ? !e.upper.is_infinite()
                                               : e.upper.is_value() && e.lower.value > e.upper.value;
        if (bad)
            throw Error(ErrorCode::InconsistentLedger, "lower bound exceeds upper bound for " +
                                                           std::string(quantity_name(q)));
    }
}

std::string n_tag(const ManifoldContext& ctx) { return "n=" + std::to_string(ctx.n); }

std::string perfectness_tag(const ManifoldContext& ctx) {
    return ctx.regularity == Regularity::Smooth ? "smooth" : "assumption_P asserted";
}

// Diameter bounds of the subgroup supported away from the circles.
void complement_diameters(BoundLedger& ledger, const ManifoldContext& ctx) {
    if (ctx.n % 2 == 1 && ctx.n >= 3) {
        const std::string rule = "odd_dimension_complement[" + n_tag(ctx) + "]";
        ledger.tighten_upper(Q::cld_G, Bound::of(Rational(4)), rule);
        ledger.tighten_upper(Q::clbd_G, Bound::of(Rational(2 * ctx.n + 4)), rule);
    } else if (ctx.n % 2 == 0 && ctx.n >= 6) {
        const std::string rule = "even_dimension_complement_finite[" + n_tag(ctx) + "]";
        ledger.tighten_upper(Q::cld_G, Bound::finite(), rule);
        ledger.tighten_upper(Q::clbd_G, Bound::finite(), rule);
    }
}

}  // namespace

BoundLedger relation_close(BoundLedger ledger) {
    // Coefficients are >= 1 on uppers and the subtracted terms are nonnegative,
    // so no cycle can tighten forever; the cap is a guard only.
    for (int round = 0; round < 256; ++round) {
        bool changed = false;
        for (const auto& rel : relations()) changed |= apply(ledger, rel);
        if (!changed) break;
    }
    check_consistent(ledger);
    return ledger;
}

BoundLedger merge(const BoundLedger& a, const BoundLedger& b) {
    BoundLedger out = a;
    for (const auto& [q, e] : b.entries()) {
        bool changed = out.tighten_upper(q, e.upper, e.rules.front());
        changed |= out.tighten_lower(q, e.lower, e.rules.front());
        if (changed)
            for (const auto& rule : e.rules) out.cite(q, rule);
    }
    return relation_close(std::move(out));
}

BoundLedger diameter_ledger(const ManifoldContext& ctx, const lattice::QuotientInfo& q,
                            const std::optional<cvp::ThetaSup>& theta_sup) {
    BoundLedger ledger;
    const int m = static_cast<int>(q.orders.size());
    if (q.rank < m) {
        // theta is unbounded on the cosets, so every lower bound through it is infinite
        ledger.tighten_lower(Q::cld, Bound::infinite(), "cld_lower_from_theta[rank<m]");
        return relation_close(std::move(ledger));
    }
    const Integer k = *q.k;
    if (ctx.perfectness()) {
        ledger.tighten_upper(Q::clbd_modG, Bound::of(Rational(*q.k_hat)),
                             "modG_diameter_k_hat[rank=m," + perfectness_tag(ctx) + "]");
        complement_diameters(ledger, ctx);
    }
    if (m == 1) {
        ledger.tighten_lower(Q::cld, Bound::of(Rational(k + 2, 8)), "cld_lower_cyclic[(k+2)/8]");
    } else if (theta_sup && !theta_sup->infinite) {
        ledger.tighten_lower(Q::cld, Bound::of(lower_cl(theta_sup->lo, 1, 3)), "cld_lower_from_theta[(theta+1)/4]");
    }
    return relation_close(std::move(ledger));
}

BoundLedger element_ledger(const ManifoldContext& ctx, const Rational& theta) {
    BoundLedger ledger;
    ledger.tighten_lower(Q::cl_f, Bound::of(lower_cl(theta, 1, 3)), "cl_lower_from_theta[(theta+1)/4]");
    if (ctx.perfectness())
        ledger.tighten_upper(Q::clb_modG_f, Bound::of(Rational(upper_clb_modG(theta))),
                             "clb_modG_upper[2(floor(theta)+1)+1," + perfectness_tag(ctx) + "]");
    complement_diameters(ledger, ctx);
    return relation_close(std::move(ledger));
}

std::string_view status_name(Status s) {
    switch (s) {
        case Status::Bounded: return "Bounded";
        case Status::Unbounded: return "Unbounded";
        case Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

std::string vector_string(const IntVector& v) {
    std::ostringstream out;
    out << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) out << (i ? "," : "") << v(i).str();
    out << ")";
    return out.str();
}

}  // namespace

Verdict verdict(const ManifoldContext& ctx, const lattice::IntLattice& a) {
    if (a.ambient_dim() != ctx.m) throw Error(ErrorCode::DimensionMismatch, "lattice dimension differs from m");
    Verdict v;
    const std::string rank = std::to_string(a.rank()), m = std::to_string(ctx.m);
    if (!a.full_rank()) {
        v.status = Status::Unbounded;
        v.justification = {
            "rank " + rank + " < m = " + m,
            "kernel functional c = " + vector_string(lattice::kernel_functional(a)) + " vanishes on A",
            "c . nu is a surjective homogeneous quasimorphism",
            "unbounded and not uniformly perfect",
        };
        return v;
    }
    const auto info = lattice::quotient_info(a);
    v.justification.push_back("rank " + rank + " = m, k = " + info.k->str() + ", k_hat = " + info.k_hat->str());
    std::vector<std::string> missing;
    if (ctx.n == 2 || ctx.n == 4) missing.push_back("n = " + std::to_string(ctx.n) + " is excluded (n in {2,4})");
    if (!ctx.connected) missing.push_back("M is not connected");
    if (!ctx.perfectness()) missing.push_back("assumption_P not asserted");
    if (!missing.empty()) {
        v.status = Status::Unknown;
        for (auto& s : missing) v.justification.push_back(std::move(s));
        return v;
    }
    v.justification.push_back(n_tag(ctx) + " not in {2,4}");
    v.justification.push_back("M connected (asserted)");
    v.justification.push_back(perfectness_tag(ctx));
    v.justification.push_back("uniformly weakly simple and bounded");
    v.status = Status::Bounded;
    return v;
}

}  // namespace rotnorm::bounds
