#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rotnorm::groups {

inline constexpr int kMaxDegree = 12;
inline constexpr std::size_t kMaxOrder = 1'000'000;

/// A bijection of {0, ..., n-1}, n <= 12. Products compose right to left:
/// (g * h)(x) = g(h(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::span<const int> images);

    static Permutation identity(int degree);
    /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" or "" is the identity.
    static Permutation from_cycles(int degree, std::string_view cycles);

    int degree() const noexcept { return degree_; }
    int operator[](int point) const noexcept { return images_[static_cast<std::size_t>(point)]; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const noexcept;

    /// Packs the image array into 48 bits; unique per (degree, images).
    std::uint64_t key() const noexcept;

    std::string cycle_string() const;
    std::vector<int> images() const;

    // Lexicographic on the image array.
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::uint8_t degree_ = 0;
    std::array<std::uint8_t, kMaxDegree> images_{};
};

Permutation commutator(const Permutation& a, const Permutation& b);
Permutation conjugate(const Permutation& by, const Permutation& g);  // by * g * by^-1

/// A finite permutation group with its full element list in canonical
/// (lexicographic) order. Copies share the element storage.
class FiniteGroup {
public:
    int degree() const noexcept { return data_->degree; }
    std::size_t order() const noexcept { return data_->elements.size(); }
    const std::vector<Permutation>& elements() const noexcept { return data_->elements; }
    const std::vector<Permutation>& generators() const noexcept { return data_->generators; }
    const Permutation& identity() const noexcept { return data_->elements.front(); }

    bool contains(const Permutation& g) const;
    /// Position in elements(); throws NotAMember.
    std::size_t index_of(const Permutation& g) const;
    const Permutation& operator[](std::size_t i) const { return data_->elements[i]; }

    friend FiniteGroup generate_group(std::span<const Permutation>, int);

private:
    struct Data {
        int degree = 0;
        std::vector<Permutation> elements;
        std::vector<Permutation> generators;
        std::unordered_map<std::uint64_t, std::size_t> index;
    };
    std::shared_ptr<const Data> data_;
};

/// Closure of `generators`. `degree` is only consulted when the set is empty.
/// Throws ClosureTooLarge past kMaxOrder elements.
FiniteGroup generate_group(std::span<const Permutation> generators, int degree = -1);

// Norm values live in Z>=0 plus an explicit infinity.
using NormValue = std::uint32_t;
inline constexpr NormValue kInfinity = std::numeric_limits<NormValue>::max();

inline NormValue saturating_add(NormValue a, NormValue b) {
    return (a == kInfinity || b == kInfinity) ? kInfinity : a + b;
}
std::string norm_to_string(NormValue v);

/// Element -> value map over a group, indexed like group.elements().
struct NormTable {
    FiniteGroup group;
    std::vector<NormValue> values;

    NormValue operator()(const Permutation& g) const { return values[group.index_of(g)]; }
    NormValue sup() const;
};

std::vector<Permutation> conjugacy_class(const FiniteGroup& group, const Permutation& g);

/// N(g): the subgroup generated by C(g) and C(g^-1).
FiniteGroup normal_closure(const FiniteGroup& group, const Permutation& g);

/// Word norm q_(G,S): Cayley-graph distance from e, infinite off N(S).
/// S must be symmetric and conjugation invariant in G.
NormTable word_norm(const FiniteGroup& group, std::span<const Permutation> generating_set);

/// {[a,b] : a, b in G}, sorted.
std::vector<Permutation> commutator_set(const FiniteGroup& group);

NormTable commutator_length(const FiniteGroup& group);

/// zeta_g, the word norm on C(g) u C(g^-1). Throws IdentityGenerator for g = e.
NormTable zeta_norm(const FiniteGroup& group, const Permutation& g);

/// q_/S(f) = min over a in S of q(f a^-1).
NormValue quotient_norm(const NormTable& q, std::span<const Permutation> subset, const Permutation& f);

enum class Simplicity { Simple, WeaklySimple, NotWeaklySimple };
std::string_view simplicity_name(Simplicity s);

struct WeaklySimpleSet {
    std::vector<Permutation> members;  // S_G, sorted
    Simplicity classification;
};

/// S_G = {g : N(g) != G}. Throws TrivialGroup when |G| = 1.
WeaklySimpleSet weakly_simple_set(const FiniteGroup& group);

/// First violated norm axiom, or an empty string. Checks zero-at-identity-only,
/// symmetry, subadditivity and conjugation invariance over all pairs.
std::string norm_axiom_violation(const NormTable& q);

/// G/N realised as the action of G on the right cosets of N.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<std::size_t> projection;  // element index in G -> element index in G/N
    std::vector<std::vector<Permutation>> cosets;
};

/// N must be normal in G with index at most kMaxDegree.
QuotientGroup quotient_group(const FiniteGroup& group, const FiniteGroup& normal);

bool is_normal_subgroup(const FiniteGroup& group, const FiniteGroup& sub);

// Standard groups used across tests and fixtures.
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
FiniteGroup cyclic_group(int n);
/// Klein four-group {e, (0 1)(2 3), (0 2)(1 3), (0 3)(1 2)} inside S4.
FiniteGroup klein_four();

}  // namespace rotnorm::groups
