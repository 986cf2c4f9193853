#include "rotnorm/defect.hpp"
#include "rotnorm/error.hpp"
#include "rotnorm/groups.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace rotnorm;
using namespace rotnorm::groups;

namespace {

Permutation P(int n, const char* cycles) { return Permutation::from_cycles(n, cycles); }

// Checks the four axioms directly, independent of norm_axiom_violation.
bool axioms_hold(const NormTable& q) {
    const auto& G = q.group;
    for (std::size_t i = 0; i < G.order(); ++i) {
        const auto& g = G[i];
        if ((q.values[i] == 0) != g.is_identity()) return false;
        if (q(g.inverse()) != q.values[i]) return false;
        for (std::size_t j = 0; j < G.order(); ++j) {
            const auto& h = G[j];
            if (q(g * h) > saturating_add(q.values[i], q.values[j])) return false;
            if (q(h * g * h.inverse()) != q.values[i]) return false;
        }
    }
    return true;
}

std::vector<std::vector<Permutation>> classes(const FiniteGroup& G) {
    std::vector<std::vector<Permutation>> out;
    std::set<Permutation> seen;
    for (const auto& g : G.elements()) {
        if (seen.count(g)) continue;
        auto c = conjugacy_class(G, g);
        seen.insert(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("generate_group closes generator sets") {
    const std::vector<Permutation> s3{P(3, "(0 1)"), P(3, "(0 1 2)")};
    CHECK(generate_group(s3).order() == 6);
    const std::vector<Permutation> a5{P(5, "(0 1 2 3 4)"), P(5, "(0 1 2)")};
    CHECK(generate_group(a5).order() == 60);
    const std::vector<Permutation> id{Permutation::identity(4)};
    CHECK(generate_group(id).order() == 1);
    CHECK(symmetric_group(4).order() == 24);
    CHECK(alternating_group(4).order() == 12);
    CHECK(klein_four().order() == 4);
}

TEST_CASE("elements are listed in lexicographic order") {
    const auto G = symmetric_group(4);
    CHECK(std::is_sorted(G.elements().begin(), G.elements().end()));
    CHECK(G.identity().is_identity());
}

TEST_CASE("closure cap") {
    const std::vector<Permutation> s12{P(12, "(0 1)"), P(12, "(0 1 2 3 4 5 6 7 8 9 10 11)")};
    CHECK_THROWS_AS(generate_group(s12), Error);
}

TEST_CASE("conjugacy classes") {
    CHECK(conjugacy_class(symmetric_group(3), P(3, "(0 1)")).size() == 3);
    CHECK(conjugacy_class(alternating_group(5), P(5, "(0 1 2)")).size() == 20);
    CHECK(conjugacy_class(symmetric_group(4), Permutation::identity(4)).size() == 1);
    try {
        conjugacy_class(alternating_group(4), P(4, "(0 1)"));
        FAIL("expected NotAMember");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAMember);
    }
}

TEST_CASE("normal closures") {
    const auto S3 = symmetric_group(3);
    CHECK(normal_closure(S3, P(3, "(0 1 2)")).order() == 3);
    CHECK(normal_closure(S3, P(3, "(0 1)")).order() == 6);
    CHECK(normal_closure(S3, S3.identity()).order() == 1);
}

TEST_CASE("word norms") {
    const auto S3 = symmetric_group(3);
    const std::vector<Permutation> transpositions{P(3, "(0 1)"), P(3, "(0 2)"), P(3, "(1 2)")};
    const auto q = word_norm(S3, transpositions);
    CHECK(q(P(3, "(0 1 2)")) == 2);
    CHECK(q(P(3, "(0 1)")) == 1);
    CHECK(q(S3.identity()) == 0);

    std::vector<Permutation> all_but_e(S3.elements().begin() + 1, S3.elements().end());
    const auto one = word_norm(S3, all_but_e);
    for (std::size_t i = 1; i < S3.order(); ++i) CHECK(one.values[i] == 1);

    const std::vector<Permutation> three_cycles{P(3, "(0 1 2)"), P(3, "(0 2 1)")};
    CHECK(word_norm(S3, three_cycles)(P(3, "(0 1)")) == kInfinity);
}

TEST_CASE("word norm preconditions") {
    const auto S3 = symmetric_group(3);
    const std::vector<Permutation> not_symmetric{P(3, "(0 1 2)")};
    const std::vector<Permutation> not_invariant{P(3, "(0 1)")};
    try {
        word_norm(S3, not_symmetric);
        FAIL("expected NotSymmetric");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSymmetric);
    }
    try {
        word_norm(S3, not_invariant);
        FAIL("expected NotConjInvariant");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotConjInvariant);
    }
}

TEST_CASE("commutator length") {
    const auto A5 = alternating_group(5);
    const auto cl = commutator_length(A5);
    for (std::size_t i = 0; i < A5.order(); ++i) CHECK(cl.values[i] == (A5[i].is_identity() ? 0u : 1u));

    const auto S3 = symmetric_group(3);
    const auto cl3 = commutator_length(S3);
    CHECK(cl3(P(3, "(0 1 2)")) == 1);
    CHECK(cl3(P(3, "(0 1)")) == kInfinity);

    const auto C5 = cyclic_group(5);
    const auto clc = commutator_length(C5);
    for (std::size_t i = 0; i < C5.order(); ++i) CHECK(clc.values[i] == (C5[i].is_identity() ? 0u : kInfinity));
}

TEST_CASE("commutator set matches a direct double loop") {
    const auto S4 = symmetric_group(4);
    std::set<Permutation> direct;
    for (const auto& a : S4.elements())
        for (const auto& b : S4.elements()) direct.insert(a * b * a.inverse() * b.inverse());
    const auto lib = commutator_set(S4);
    CHECK(std::vector<Permutation>(direct.begin(), direct.end()) == lib);
}

TEST_CASE("zeta norms") {
    const auto S3 = symmetric_group(3);
    const auto z = zeta_norm(S3, P(3, "(0 1)"));
    CHECK(z(P(3, "(0 1 2)")) == 2);
    CHECK(z(P(3, "(0 1)")) == 1);
    CHECK(zeta_norm(S3, P(3, "(0 1 2)"))(P(3, "(0 1)")) == kInfinity);
    try {
        zeta_norm(S3, S3.identity());
        FAIL("expected IdentityGenerator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IdentityGenerator);
    }
}

TEST_CASE("weakly simple sets") {
    const auto s3 = weakly_simple_set(symmetric_group(3));
    CHECK(s3.members.size() == 3);
    for (const auto& g : s3.members) CHECK(alternating_group(3).contains(g));
    CHECK(s3.classification == Simplicity::WeaklySimple);

    const auto a5 = weakly_simple_set(alternating_group(5));
    CHECK(a5.members.size() == 1);
    CHECK(a5.classification == Simplicity::Simple);

    const auto c4 = weakly_simple_set(cyclic_group(4));
    CHECK(c4.members == std::vector<Permutation>{Permutation::identity(4), P(4, "(0 2)(1 3)")});
    CHECK(c4.classification == Simplicity::WeaklySimple);

    try {
        weakly_simple_set(cyclic_group(1));
        FAIL("expected TrivialGroup");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TrivialGroup);
    }
}

TEST_CASE("norm axioms hold exhaustively") {
    for (const auto& G : {symmetric_group(3), symmetric_group(4), alternating_group(5)}) {
        const auto cl = commutator_length(G);
        CHECK(axioms_hold(cl));
        CHECK(norm_axiom_violation(cl).empty());
        for (const auto& c : classes(G)) {
            if (c.front().is_identity()) continue;
            const auto z = zeta_norm(G, c.front());
            CHECK(axioms_hold(z));
        }
    }
}

TEST_CASE("quotient norm examples") {
    const auto S4 = symmetric_group(4);
    const auto cl = commutator_length(S4);
    const auto V = klein_four().elements();
    CHECK(quotient_norm(cl, V, P(4, "(0 1)")) == kInfinity);
    CHECK(quotient_norm(cl, V, P(4, "(0 1 2)")) == 1);
    for (const auto& f : V) CHECK(quotient_norm(cl, V, f) == 0);
    try {
        quotient_norm(cl, std::span<const Permutation>(), P(4, "(0 1)"));
        FAIL("expected EmptySubset");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySubset);
    }
}

TEST_CASE("quotient norm laws hold exhaustively") {
    for (const auto& G : {symmetric_group(3), symmetric_group(4)}) {
        const auto q = commutator_length(G);
        std::vector<std::vector<Permutation>> subsets;
        // every normal subgroup through a normal closure, plus single classes with e
        for (const auto& c : classes(G)) {
            subsets.push_back(normal_closure(G, c.front()).elements());
            auto with_e = c;
            with_e.push_back(G.identity());
            subsets.push_back(with_e);
        }
        for (const auto& S : subsets) {
            NormValue sup = 0;
            for (const auto& a : S) sup = std::max(sup, q(a));
            for (const auto& f : G.elements()) {
                const NormValue qf = quotient_norm(q, S, f);
                CHECK(qf <= q(f));
                CHECK(q(f) <= saturating_add(qf, sup));
                for (const auto& g : G.elements()) CHECK(quotient_norm(q, S, g * f) <= saturating_add(q(g), qf));
            }
        }
    }
}

TEST_CASE("quotient by a normal subgroup factors through G/N") {
    const auto V = klein_four();
    for (const auto& G : {symmetric_group(4), alternating_group(4)}) {
        REQUIRE(is_normal_subgroup(G, V));
        const auto Q = quotient_group(G, V);
        CHECK(Q.group.order() == G.order() / 4);
        const auto cl = commutator_length(G);
        const auto clq = commutator_length(Q.group);
        for (std::size_t i = 0; i < G.order(); ++i)
            CHECK(quotient_norm(cl, V.elements(), G[i]) == clq.values[Q.projection[i]]);
    }
}

TEST_CASE("S4 / V4 has the commutator length profile of S3") {
    const auto Q = quotient_group(symmetric_group(4), klein_four());
    auto profile = [](const NormTable& t) {
        auto v = t.values;
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(profile(commutator_length(Q.group)) == profile(commutator_length(symmetric_group(3))));
}

TEST_CASE("master norm rule") {
    for (const auto& G : {symmetric_group(3), symmetric_group(4), alternating_group(4), alternating_group(5)}) {
        const auto cl = commutator_length(G);
        for (const auto& c : classes(G)) {
            const auto& g = c.front();
            if (g.is_identity() || cl(g) == kInfinity) continue;
            const auto z = zeta_norm(G, g);
            const NormValue k = z.sup();
            if (k == kInfinity) continue;
            for (std::size_t i = 0; i < G.order(); ++i) CHECK(cl.values[i] <= k * cl(g));
        }
    }
}

TEST_CASE("monotonicity in the generating set") {
    defect::Sampler rng(11);
    for (const auto& G : {symmetric_group(4), alternating_group(5)}) {
        auto cls = classes(G);
        cls.erase(cls.begin());  // drop {e}
        for (int trial = 0; trial < 20; ++trial) {
            // symmetric conjugation invariant sets: unions of classes closed under inverse
            std::vector<Permutation> big, small;
            for (const auto& c : cls) {
                const bool in_big = rng.uniform(0, 1) == 1;
                if (!in_big) continue;
                const bool in_small = rng.uniform(0, 1) == 1;
                for (const auto& g : c) {
                    big.push_back(g);
                    if (in_small) small.push_back(g);
                }
            }
            auto close_inverse = [](std::vector<Permutation>& s) {
                const auto copy = s;
                for (const auto& g : copy) s.push_back(g.inverse());
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
            };
            close_inverse(big);
            close_inverse(small);
            if (small.empty()) continue;
            std::sort(big.begin(), big.end());
            for (const auto& g : small) big.push_back(g);
            std::sort(big.begin(), big.end());
            big.erase(std::unique(big.begin(), big.end()), big.end());

            const auto qb = word_norm(G, big);
            const auto qs = word_norm(G, small);
            for (std::size_t i = 0; i < G.order(); ++i) CHECK(qb.values[i] <= qs.values[i]);

            // small lies in big^1, so q_big <= 1 * q_small; and big lies in small^k when q_small <= k on big
            NormValue k = 0;
            for (const auto& g : big) k = std::max(k, qs(g));
            if (k != kInfinity)
                for (std::size_t i = 0; i < G.order(); ++i)
                    if (qb.values[i] != kInfinity) CHECK(qs.values[i] <= k * qb.values[i]);
        }
    }
}

}  // TEST_SUITE
