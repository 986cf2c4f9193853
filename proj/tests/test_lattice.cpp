#include "oracle.hpp"

#include "rotnorm/error.hpp"
#include "rotnorm/lattice.hpp"

#include <doctest.h>

#include <set>

using namespace rotnorm;
using namespace rotnorm::lattice;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (long x : xs) v(i++) = Integer(x);
    return v;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("normalize examples") {
    const auto a = normalize(2, {iv({2, 0}), iv({0, 3}), iv({2, 3})});
    CHECK(a.rank() == 2);
    CHECK(a.basis().row(0).transpose() == iv({2, 0}));
    CHECK(a.basis().row(1).transpose() == iv({0, 3}));

    const auto zero = normalize(2, {});
    CHECK(zero.rank() == 0);

    const auto diag = normalize(3, {iv({1, 1, 1})});
    CHECK(diag.rank() == 1);
    CHECK(diag.basis().row(0).transpose() == iv({1, 1, 1}));
}

TEST_CASE("normalize rejects bad input") {
    try {
        normalize(2, {iv({1, 2, 3})});
        FAIL("expected DimensionMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
    CHECK_THROWS_AS(normalize(9, {}), Error);
    CHECK_THROWS_AS(normalize(0, {}), Error);
}

TEST_CASE("membership") {
    const auto a = normalize(2, {iv({2, 0}), iv({0, 3})});
    CHECK(member(a, iv({4, -3})));
    CHECK_FALSE(member(a, iv({1, 0})));
    CHECK_FALSE(member(normalize(3, {iv({1, 1, 1})}), iv({1, 0, 0})));
    CHECK(member(normalize(3, {}), iv({0, 0, 0})));
}

TEST_CASE("quotient info examples") {
    const auto q = quotient_info(normalize(2, {iv({2, 0}), iv({0, 3})}));
    CHECK(q.rank == 2);
    CHECK(*q.orders[0] == 2);
    CHECK(*q.orders[1] == 3);
    CHECK(*q.k == 3);
    CHECK(*q.k_hat == 5);
    CHECK(*q.index == 6);
    CHECK_FALSE(q.extension);

    const auto d = quotient_info(normalize(3, {iv({1, 1, 1})}));
    CHECK(d.rank == 1);
    for (const auto& k : d.orders) CHECK_FALSE(k.has_value());
    CHECK_FALSE(d.k_hat.has_value());
    CHECK(d.extension);

    const auto z = quotient_info(normalize(1, {}));
    CHECK(z.rank == 0);
    REQUIRE(z.cyclic_generator.has_value());
    CHECK(*z.cyclic_generator == 0);
}

TEST_CASE("k_hat formula") {
    const int expected[] = {3, 5, 5, 7, 7, 9};
    for (int k = 1; k <= 6; ++k) CHECK(k_hat(Integer(k)) == expected[k - 1]);
    for (int k = 1; k < 40; ++k) CHECK(k_hat(Integer(k)) <= k_hat(Integer(k + 1)));
}

TEST_CASE("kernel functional") {
    CHECK(kernel_functional(normalize(3, {iv({1, 1, 1})})) == iv({1, -1, 0}));
    CHECK(kernel_functional(normalize(1, {})) == iv({1}));
    try {
        kernel_functional(normalize(2, {iv({2, 0}), iv({0, 3})}));
        FAIL("expected FullRank");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FullRank);
    }
}

TEST_CASE("random generator sets") {
    defect::Sampler rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int m = static_cast<int>(rng.uniform(1, 5));
        const auto count = rng.uniform(0, m + 1);
        std::vector<oracle::Vec> gens;
        for (std::int64_t g = 0; g < count; ++g) {
            oracle::Vec v(static_cast<std::size_t>(m));
            for (auto& e : v) e = rng.uniform(-9, 9);
            gens.push_back(v);
        }
        const auto ints = oracle::to_int_vectors(gens, static_cast<std::size_t>(m));
        const auto a = normalize(m, ints);
        const oracle::Echelon ref(static_cast<std::size_t>(m), gens);

        // same lattice by mutual membership, and idempotence
        for (const auto& g : ints) CHECK(member(a, g));
        std::vector<IntVector> rows;
        std::vector<oracle::Vec> row_vecs;
        for (Eigen::Index r = 0; r < a.basis().rows(); ++r) {
            rows.push_back(a.basis().row(r).transpose());
            oracle::Vec v;
            for (Eigen::Index c = 0; c < m; ++c) v.push_back(static_cast<std::int64_t>(a.basis()(r, c)));
            row_vecs.push_back(v);
            CHECK(ref.contains(v));
        }
        CHECK(normalize(m, rows) == a);
        CHECK(static_cast<std::size_t>(a.rank()) == ref.rank());

        const auto q = quotient_info(a);
        CHECK((q.rank == m) == (q.index.has_value()));
        for (int i = 0; i < m; ++i) {
            IntVector e = IntVector::Zero(m);
            if (q.orders[static_cast<std::size_t>(i)]) {
                e(i) = *q.orders[static_cast<std::size_t>(i)];
                CHECK(member(a, e));
                // minimality against the independent membership test
                for (Integer t = 1; t < *q.orders[static_cast<std::size_t>(i)]; ++t) {
                    oracle::Vec v(static_cast<std::size_t>(m), 0);
                    v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(t);
                    CHECK_FALSE(ref.contains(v));
                }
            }
        }
        if (q.rank == m) {
            Integer product = 1;
            for (const auto& d : q.invariant_factors) product *= d;
            CHECK(product == *q.index);
            for (const auto& k : q.orders) CHECK(k.has_value());
        } else {
            bool some_infinite = false;
            for (const auto& k : q.orders) some_infinite = some_infinite || !k.has_value();
            CHECK(some_infinite);
            const IntVector c = kernel_functional(a);
            CHECK(c != IntVector::Zero(m));
            for (const auto& g : ints) CHECK(c.dot(g) == 0);
        }
    }
}

TEST_CASE("quotient order by counting cosets") {
    // count classes of the box [0, 2N)^m modulo A: for full rank this is |Z^m / A| once N is large enough
    defect::Sampler rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = static_cast<int>(rng.uniform(1, 3));
        std::vector<oracle::Vec> gens;
        for (int g = 0; g < m; ++g) {
            oracle::Vec v(static_cast<std::size_t>(m));
            for (auto& e : v) e = rng.uniform(-4, 4);
            gens.push_back(v);
        }
        const auto a = normalize(m, oracle::to_int_vectors(gens, static_cast<std::size_t>(m)));
        const auto q = quotient_info(a);
        if (q.rank != m) continue;
        const oracle::Echelon ref(static_cast<std::size_t>(m), gens);
        // representatives: every class meets the box [0, d)^m where d = index
        const std::int64_t d = static_cast<std::int64_t>(*q.index);
        std::vector<oracle::Vec> reps;
        oracle::Vec v(static_cast<std::size_t>(m), 0);
        while (true) {
            bool fresh = true;
            for (const auto& r : reps) {
                oracle::Vec diff(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) diff[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i)];
                if (ref.contains(diff)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) reps.push_back(v);
            int i = m;
            while (i > 0 && v[static_cast<std::size_t>(i - 1)] == d - 1) v[static_cast<std::size_t>(--i)] = 0;
            if (i == 0) break;
            ++v[static_cast<std::size_t>(i - 1)];
        }
        CHECK(static_cast<std::int64_t>(reps.size()) == d);
    }
}

}  // TEST_SUITE
