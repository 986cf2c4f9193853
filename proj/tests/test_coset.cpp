#include "oracle.hpp"

#include "rotnorm/coset.hpp"
#include "rotnorm/error.hpp"

#include <doctest.h>

using namespace rotnorm;
using namespace rotnorm::cvp;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v(i++) = Integer(x);
    return v;
}

RatVector rv(const char* text) {
    const auto xs = parse_rational_list(text);
    RatVector v(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v(static_cast<Eigen::Index>(i)) = xs[i];
    return v;
}

const IntLattice A23 = lattice::normalize(2, {iv({2, 0}), iv({0, 3})});

}  // namespace

TEST_SUITE("coset") {

TEST_CASE("canonical representatives") {
    CHECK(canonical_rep(AffineCoset(A23, rv("5,-4"))) == rv("1,-1"));
    CHECK(canonical_rep(AffineCoset(A23, rv("0,0"))) == rv("0,0"));
    CHECK(canonical_rep(AffineCoset(lattice::normalize(1, {iv({2})}), rv("3"))) == rv("1"));
    try {
        canonical_rep(AffineCoset(lattice::normalize(3, {iv({1, 1, 1})}), rv("0,0,0")));
        FAIL("expected RankDeficient");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankDeficient);
    }
}

TEST_CASE("theta examples") {
    const auto odd = theta(AffineCoset(lattice::normalize(1, {iv({2})}), rv("1")));
    CHECK(odd.theta == 1);
    CHECK(odd.points == std::vector<RatVector>{rv("-1"), rv("1")});

    const auto t = theta(AffineCoset(A23, rv("6/5,-5/2")));
    CHECK(t.theta == Rational(4, 5));
    CHECK(t.points == std::vector<RatVector>{rv("-4/5,1/2")});

    const auto d = theta(AffineCoset(lattice::normalize(3, {iv({1, 1, 1})}), rv("1/2,0,0")));
    CHECK(d.theta == Rational(1, 2));
    CHECK(d.points == std::vector<RatVector>{rv("1/2,0,0")});
}

TEST_CASE("equal cosets store equal offsets") {
    CHECK(AffineCoset(A23, rv("6/5,-5/2")) == AffineCoset(A23, rv("-4/5,1/2")));
    CHECK_FALSE(AffineCoset(A23, rv("6/5,-5/2")) == AffineCoset(A23, rv("1/5,1/2")));
}

TEST_CASE("theta agrees with brute force") {
    defect::Sampler rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const auto inst = oracle::random_cvp_instance(rng);
        const auto a = lattice::normalize(static_cast<int>(inst.m), oracle::to_int_vectors(inst.generators, inst.m));
        const auto expected = oracle::brute_force_theta(oracle::Echelon(inst.m, inst.generators), inst.offset);
        const auto got = theta(AffineCoset(a, inst.offset));
        CHECK(got.theta == expected.theta);
        CHECK(got.points == expected.points);
        CHECK(theta_value(AffineCoset(a, inst.offset)) == expected.theta);
    }
}

TEST_CASE("coset invariants") {
    defect::Sampler rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = oracle::random_cvp_instance(rng);
        const int m = static_cast<int>(inst.m);
        const auto a = lattice::normalize(m, oracle::to_int_vectors(inst.generators, inst.m));
        const AffineCoset z(a, inst.offset);
        const auto t = theta(z);
        REQUIRE_FALSE(t.points.empty());
        for (const auto& y : t.points) {
            CHECK(sup_norm(y) == t.theta);
            CHECK(z.contains(y));
        }

        // theta is a function of the coset
        IntVector shift = IntVector::Zero(m);
        for (const auto& g : oracle::to_int_vectors(inst.generators, inst.m)) shift += Integer(rng.uniform(-3, 3)) * g;
        const RatVector moved = inst.offset + to_rational(shift);
        CHECK(theta(AffineCoset(a, moved)).theta == t.theta);

        // zero exactly on the lattice itself
        bool integral = true;
        IntVector xi(m);
        for (int i = 0; i < m; ++i) {
            integral = integral && denom(inst.offset(i)) == 1;
            if (integral) xi(i) = numer(inst.offset(i));
        }
        CHECK((t.theta == 0) == (integral && lattice::member(a, xi)));

        if (a.full_rank()) {
            const auto q = lattice::quotient_info(a);
            const RatVector c = canonical_rep(z);
            CHECK(z.contains(c));
            for (int i = 0; i < m; ++i) {
                const Rational half(*q.orders[static_cast<std::size_t>(i)], 2);
                CHECK(c(i) > -half);
                CHECK(c(i) <= half);
            }
            CHECK(t.theta <= sup_norm(c));
            CHECK(sup_norm(c) <= Rational(*q.k, 2));
        }
    }
}

TEST_CASE("theta sup") {
    const auto six = theta_sup(lattice::normalize(1, {iv({6})}), Rational(1, 10));
    CHECK(six.exact());
    CHECK(six.lo == 3);

    const auto z2 = theta_sup(lattice::standard_lattice(2), Rational(1, 100));
    CHECK(z2.exact());
    CHECK(z2.lo == Rational(1, 2));

    CHECK(theta_sup(lattice::normalize(3, {iv({1, 1, 1})}), Rational(1, 10)).infinite);
    CHECK_THROWS_AS(theta_sup(A23, Rational(0)), Error);
}

TEST_CASE("theta sup brackets every coset") {
    defect::Sampler rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const int m = static_cast<int>(rng.uniform(2, 3));
        std::vector<IntVector> gens;
        for (int g = 0; g < m; ++g) {
            IntVector v(m);
            for (int i = 0; i < m; ++i) v(i) = Integer(rng.uniform(-4, 4));
            gens.push_back(v);
        }
        const auto a = lattice::normalize(m, gens);
        if (!a.full_rank()) continue;
        const Rational eps(1, 8);
        const auto s = theta_sup(a, eps);
        const auto q = lattice::quotient_info(a);
        CHECK(0 <= s.lo);
        CHECK(s.lo <= s.hi);
        CHECK(s.hi - s.lo <= eps);
        CHECK(s.hi <= Rational(*q.k, 2));
        for (int probe = 0; probe < 30; ++probe) {
            RatVector x(m);
            for (int i = 0; i < m; ++i) x(i) = Rational(rng.uniform(-24, 24), 12);
            CHECK(theta_value(AffineCoset(a, x)) <= s.hi);
        }
    }
}

}  // TEST_SUITE
