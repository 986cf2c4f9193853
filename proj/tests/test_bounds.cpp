#include "rotnorm/bounds.hpp"
#include "rotnorm/defect.hpp"
#include "rotnorm/error.hpp"

#include <doctest.h>

using namespace rotnorm;
using namespace rotnorm::bounds;

namespace {

Rational q(const char* s) { return parse_rational(s); }

ManifoldContext ctx(int n, int m, bool connected = true, Regularity r = Regularity::Smooth, bool p = false) {
    return ManifoldContext::make(n, m, connected, Topology::Closed, r, p);
}

IntVector iv(std::initializer_list<long> xs) {
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v(i++) = Integer(x);
    return v;
}

bool entries_consistent(const BoundLedger& l) {
    for (const auto& [qty, e] : l.entries()) {
        if (e.rules.empty()) return false;
        if (e.lower.is_value() && e.upper.is_value() && e.lower.value > e.upper.value) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("context validation") {
    CHECK_THROWS_AS(ctx(1, 1), Error);
    CHECK_THROWS_AS(ctx(3, 0), Error);
    CHECK(ctx(3, 1).assumption_P);
    CHECK_FALSE(ctx(3, 1, true, Regularity::FiniteR).perfectness());
    CHECK(ctx(3, 1, true, Regularity::FiniteR, true).perfectness());
}

TEST_CASE("bound arithmetic") {
    CHECK(Bound::of(2) + Bound::of(3) == Bound::of(5));
    CHECK(Bound::of(2) + Bound::finite() == Bound::finite());
    CHECK(Bound::finite() + Bound::infinite() == Bound::infinite());
    CHECK(Rational(4) * Bound::of(q("5/2")) == Bound::of(10));
    CHECK(to_string(Bound::finite()) == "finite");
    CHECK(to_string(Bound::infinite()) == "inf");
    for (auto qty : kQuantities) CHECK(parse_quantity(quantity_name(qty)) == qty);
    CHECK_FALSE(parse_quantity("nope").has_value());
}

TEST_CASE("lower_cl") {
    CHECK(lower_cl(3, 1, 3) == 1);
    CHECK(lower_cl(0, 1, 3) == q("1/4"));
    CHECK(lower_cl(q("5/2"), 1, 3) == q("7/8"));
    try {
        lower_cl(1, 1, -1);
        FAIL("expected ZeroDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDenominator);
    }
}

TEST_CASE("upper_clb_modG") {
    CHECK(upper_clb_modG(q("5/2")) == 7);
    CHECK(upper_clb_modG(0) == 3);
    CHECK(upper_clb_modG(1) == 5);
}

TEST_CASE("lower and upper element bounds never cross") {
    for (int j = 0; j <= 100; ++j) {
        const Rational theta(j, 10);
        CHECK(lower_cl(theta, 1, 3) <= Rational(upper_clb_modG(theta)));
    }
}

TEST_CASE("relation closure examples") {
    BoundLedger a;
    a.tighten_upper(Quantity::clb_modG_f, Bound::of(7), "given");
    a.tighten_upper(Quantity::clbd_G, Bound::of(10), "given");
    CHECK(relation_close(a).get(Quantity::clb_f).upper == Bound::of(17));

    CHECK(relation_close(BoundLedger{}) == BoundLedger{});

    BoundLedger b;
    b.tighten_upper(Quantity::clb_f, Bound::of(5), "given");
    const auto cb = relation_close(b);
    CHECK(cb.get(Quantity::cl_f).upper == Bound::of(5));
    CHECK(cb.get(Quantity::zeta).upper == Bound::of(20));
}

TEST_CASE("relation closure raises lower bounds") {
    BoundLedger l;
    l.tighten_lower(Quantity::cl_f, Bound::of(2), "given");
    l.tighten_upper(Quantity::cld_G, Bound::of(q("1/2")), "given");
    const auto c = relation_close(l);
    CHECK(c.get(Quantity::clb_f).lower == Bound::of(2));
    CHECK(c.get(Quantity::eta).lower == Bound::of(1));
    CHECK(c.get(Quantity::cl_modG_f).lower == Bound::of(q("3/2")));
    CHECK(c.get(Quantity::cld).lower == Bound::of(2));
}

TEST_CASE("contradictions are reported") {
    BoundLedger l;
    l.tighten_lower(Quantity::cl_f, Bound::of(5), "given");
    l.tighten_upper(Quantity::clb_f, Bound::of(3), "given");
    try {
        relation_close(l);
        FAIL("expected InconsistentLedger");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InconsistentLedger);
        CHECK(e.is_inconsistency());
    }
    BoundLedger inf;
    inf.tighten_lower(Quantity::cld, Bound::infinite(), "given");
    inf.tighten_upper(Quantity::clbd, Bound::finite(), "given");
    CHECK_THROWS_AS(relation_close(inf), Error);
}

TEST_CASE("closure is idempotent and monotone") {
    defect::Sampler rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        BoundLedger l;
        for (int k = 0; k < 4; ++k) {
            const auto qty = kQuantities[static_cast<std::size_t>(rng.uniform(0, kQuantities.size() - 1))];
            if (rng.uniform(0, 3) == 0) l.tighten_upper(qty, Bound::finite(), "given");
            else l.tighten_upper(qty, Bound::of(Rational(rng.uniform(20, 80), 4)), "given");
        }
        for (int k = 0; k < 2; ++k) {
            const auto qty = kQuantities[static_cast<std::size_t>(rng.uniform(0, kQuantities.size() - 1))];
            l.tighten_lower(qty, Bound::of(Rational(rng.uniform(0, 4), 4)), "given");
        }
        BoundLedger closed;
        try {
            closed = relation_close(l);
        } catch (const Error&) {
            continue;
        }
        CHECK(relation_close(closed) == closed);
        CHECK(entries_consistent(closed));
        for (const auto& [qty, e] : l.entries()) {
            const auto after = closed.get(qty);
            if (e.upper.is_value()) CHECK((after.upper.is_value() && after.upper.value <= e.upper.value));
            if (e.lower.is_value()) CHECK((after.lower.is_infinite() || after.lower.value >= e.lower.value));
        }
    }
}

TEST_CASE("torus knot diameters") {
    const auto q1 = lattice::quotient_info(lattice::standard_lattice(1));
    const auto l = diameter_ledger(ctx(3, 1), q1);
    CHECK(*q1.k_hat == 3);
    CHECK(l.get(Quantity::cld).upper == Bound::of(7));
    CHECK(l.get(Quantity::clbd).upper == Bound::of(13));
    CHECK(l.get(Quantity::cld).lower == Bound::of(q("3/8")));
    CHECK(l.get(Quantity::clbd_modG).upper == Bound::of(3));
    CHECK(entries_consistent(l));
}

TEST_CASE("diameter ledger branches") {
    const auto hopf3 = lattice::normalize(3, {iv({1, 1, 1})});
    const auto h = diameter_ledger(ctx(3, 3), lattice::quotient_info(hopf3));
    CHECK(h.get(Quantity::cld).upper.is_infinite());
    CHECK(h.get(Quantity::clbd).upper.is_infinite());
    CHECK(h.get(Quantity::cld).lower.is_infinite());

    const auto two = lattice::normalize(1, {iv({2})});
    const auto even = diameter_ledger(ctx(6, 1), lattice::quotient_info(two));
    CHECK(even.get(Quantity::clbd_modG).upper == Bound::of(5));
    CHECK(even.get(Quantity::cld).upper == Bound::finite());
    CHECK(even.get(Quantity::cld).lower == Bound::of(q("1/2")));

    for (int n : {2, 4}) {
        const auto l = diameter_ledger(ctx(n, 1), lattice::quotient_info(two));
        CHECK(l.get(Quantity::cld).upper.is_infinite());
        CHECK_FALSE(l.has(Quantity::cld_G));
    }

    // without the perfectness assumption only lower bounds remain
    const auto nop = diameter_ledger(ctx(3, 1, true, Regularity::FiniteR), lattice::quotient_info(two));
    CHECK_FALSE(nop.has(Quantity::clbd_modG));
    CHECK(nop.get(Quantity::cld).upper.is_infinite());
    CHECK(nop.get(Quantity::cld).lower == Bound::of(q("1/2")));

    // m >= 2 uses the sup of theta
    const auto z2 = lattice::standard_lattice(2);
    cvp::ThetaSup s;
    s.lo = s.hi = q("1/2");
    const auto l2 = diameter_ledger(ctx(3, 2), lattice::quotient_info(z2), s);
    CHECK(l2.get(Quantity::cld).lower == Bound::of(q("3/8")));
    CHECK(l2.get(Quantity::cld).upper == Bound::of(7));
}

TEST_CASE("element ledger") {
    const auto l = element_ledger(ctx(3, 1), q("5/2"));
    CHECK(l.get(Quantity::cl_f).lower == Bound::of(q("7/8")));
    CHECK(l.get(Quantity::clb_modG_f).upper == Bound::of(7));
    CHECK(l.get(Quantity::clb_f).upper == Bound::of(17));
    CHECK(entries_consistent(l));
    const auto nop = element_ledger(ctx(3, 1, true, Regularity::FiniteR), q("5/2"));
    CHECK_FALSE(nop.has(Quantity::clb_modG_f));
    CHECK_THROWS_AS(element_ledger(ctx(3, 1), q("-1")), Error);
}

TEST_CASE("merge keeps the tighter side") {
    const auto a = element_ledger(ctx(3, 1), q("5/2"));
    const auto b = diameter_ledger(ctx(3, 1), lattice::quotient_info(lattice::standard_lattice(1)));
    const auto m = merge(a, b);
    CHECK(m.get(Quantity::cl_f).upper == Bound::of(7));
    CHECK(m.get(Quantity::cl_f).lower == Bound::of(q("7/8")));
    // rule order follows argument order; the bounds themselves do not
    const auto r = merge(b, a);
    for (const auto q : kQuantities) {
        CHECK(m.get(q).lower == r.get(q).lower);
        CHECK(m.get(q).upper == r.get(q).upper);
    }
}

TEST_CASE("verdicts") {
    CHECK(verdict(ctx(3, 1), lattice::standard_lattice(1)).status == Status::Bounded);
    const auto hopf3 = lattice::normalize(3, {iv({1, 1, 1})});
    const auto u = verdict(ctx(3, 3), hopf3);
    CHECK(u.status == Status::Unbounded);
    CHECK_FALSE(u.justification.empty());
    CHECK(verdict(ctx(4, 1), lattice::standard_lattice(1)).status == Status::Unknown);
    CHECK(verdict(ctx(3, 1, false), lattice::standard_lattice(1)).status == Status::Unknown);
    CHECK(verdict(ctx(3, 1, true, Regularity::FiniteR), lattice::standard_lattice(1)).status == Status::Unknown);
    CHECK(verdict(ctx(3, 1, true, Regularity::FiniteR, true), lattice::standard_lattice(1)).status == Status::Bounded);
    try {
        verdict(ctx(3, 2), lattice::standard_lattice(1));
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
}

TEST_CASE("verdicts agree with the other modules") {
    defect::Sampler rng(64);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = static_cast<int>(rng.uniform(1, 3));
        const int n = static_cast<int>(rng.uniform(2, 8));
        std::vector<IntVector> gens;
        const auto count = rng.uniform(0, m);
        for (std::int64_t g = 0; g < count; ++g) {
            IntVector v(m);
            for (int i = 0; i < m; ++i) v(i) = Integer(rng.uniform(-3, 3));
            gens.push_back(v);
        }
        const auto a = lattice::normalize(m, gens);
        const auto c = ctx(n, m, rng.uniform(0, 3) != 0, rng.uniform(0, 1) ? Regularity::Smooth : Regularity::FiniteR,
                           rng.uniform(0, 1) == 1);
        const auto v = verdict(c, a);
        if (v.status == Status::Unbounded) {
            CHECK(a.rank() < m);
            const IntVector f = lattice::kernel_functional(a);
            for (const auto& g : gens) CHECK(f.dot(g) == 0);
        }
        if (v.status == Status::Bounded) {
            const auto l = diameter_ledger(c, lattice::quotient_info(a));
            CHECK_FALSE(l.get(Quantity::cld).upper.is_infinite());
            CHECK_FALSE(l.get(Quantity::clbd).upper.is_infinite());
        }
    }
}

}  // TEST_SUITE
