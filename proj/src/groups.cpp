#include "rotnorm/groups.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace rotnorm::groups {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::span<const int> images) {
    if (images.size() > static_cast<std::size_t>(kMaxDegree))
        throw Error(ErrorCode::InvalidInput, "permutation degree exceeds 12");
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
        const int v = images[i];
        if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
            throw Error(ErrorCode::InvalidInput, "image array is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
        images_[i] = static_cast<std::uint8_t>(v);
    }
    degree_ = static_cast<std::uint8_t>(images.size());
}

Permutation Permutation::identity(int degree) {
    if (degree < 0 || degree > kMaxDegree)
        throw Error(ErrorCode::InvalidInput, "permutation degree out of range");
    Permutation p;
    p.degree_ = static_cast<std::uint8_t>(degree);
    for (int i = 0; i < degree; ++i) p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view cycles) {
    Permutation p = identity(degree);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < cycles.size() && std::isspace(static_cast<unsigned char>(cycles[pos]))) ++pos;
    };
    std::array<bool, kMaxDegree> used{};
    skip_space();
    while (pos < cycles.size()) {
        if (cycles[pos] != '(')
            throw Error(ErrorCode::InvalidInput, "expected '(' in cycle notation");
        ++pos;
        std::vector<int> cycle;
        for (;;) {
            skip_space();
            if (pos >= cycles.size()) throw Error(ErrorCode::InvalidInput, "unterminated cycle");
            if (cycles[pos] == ')') {
                ++pos;
                break;
            }
            if (cycles[pos] == ',') {
                ++pos;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(cycles[pos])))
                throw Error(ErrorCode::InvalidInput, "unexpected character in cycle notation");
            int v = 0;
            while (pos < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[pos])))
                v = v * 10 + (cycles[pos++] - '0');
            if (v >= degree) throw Error(ErrorCode::InvalidInput, "cycle point exceeds degree");
            if (used[static_cast<std::size_t>(v)])
                throw Error(ErrorCode::InvalidInput, "cycles are not disjoint");
            used[static_cast<std::size_t>(v)] = true;
            cycle.push_back(v);
        }
        for (std::size_t i = 0; i < cycle.size(); ++i)
            p.images_[static_cast<std::size_t>(cycle[i])] =
                static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
        skip_space();
    }
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree_ != rhs.degree_) throw Error(ErrorCode::InvalidInput, "degree mismatch in product");
    Permutation out;
    out.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) out.images_[i] = images_[rhs.images_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) out.images_[images_[i]] = static_cast<std::uint8_t>(i);
    return out;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < degree_; ++i)
        if (images_[i] != i) return false;
    return true;
}

std::uint64_t Permutation::key() const noexcept {
    std::uint64_t k = degree_;
    for (std::size_t i = 0; i < degree_; ++i) k = (k << 4) | images_[i];
    return k;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t start = 0; start < degree_; ++start) {
        if (seen[start] || images_[start] == start) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x);
            first = false;
            x = images_[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

std::vector<int> Permutation::images() const {
    return {images_.begin(), images_.begin() + degree_};
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a * b * a.inverse() * b.inverse();
}

Permutation conjugate(const Permutation& by, const Permutation& g) { return by * g * by.inverse(); }

// ---------------------------------------------------------------------------
// FiniteGroup

bool FiniteGroup::contains(const Permutation& g) const {
    return g.degree() == degree() && data_->index.contains(g.key());
}

std::size_t FiniteGroup::index_of(const Permutation& g) const {
    if (g.degree() == degree()) {
        if (auto it = data_->index.find(g.key()); it != data_->index.end()) return it->second;
    }
    throw Error(ErrorCode::NotAMember, g.cycle_string() + " is not an element of the group");
}

FiniteGroup generate_group(std::span<const Permutation> generators, int degree) {
    if (!generators.empty()) degree = generators.front().degree();
    if (degree < 0) throw Error(ErrorCode::InvalidInput, "empty generating set needs an explicit degree");
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw Error(ErrorCode::InvalidInput, "generators do not share one degree");

    std::vector<Permutation> gens;
    for (const auto& g : generators)
        if (!g.is_identity()) gens.push_back(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    const Permutation e = Permutation::identity(degree);
    std::unordered_set<std::uint64_t> seen{e.key()};
    std::vector<Permutation> elements{e};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& s : gens) {
            Permutation next = elements[head] * s;
            if (seen.insert(next.key()).second) {
                if (elements.size() >= kMaxOrder)
                    throw Error(ErrorCode::ClosureTooLarge, "group closure exceeds 10^6 elements");
                elements.push_back(next);
            }
        }
    }
    std::sort(elements.begin(), elements.end());

    auto data = std::make_shared<FiniteGroup::Data>();
    data->degree = degree;
    data->generators = std::move(gens);
    data->index.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) data->index.emplace(elements[i].key(), i);
    data->elements = std::move(elements);

    FiniteGroup group;
    group.data_ = std::move(data);
    return group;
}

// ---------------------------------------------------------------------------
// Norms

std::string norm_to_string(NormValue v) { return v == kInfinity ? "inf" : std::to_string(v); }

NormValue NormTable::sup() const {
    NormValue best = 0;
    for (auto v : values) best = std::max(best, v);
    return best;
}

std::vector<Permutation> conjugacy_class(const FiniteGroup& group, const Permutation& g) {
    group.index_of(g);
    std::set<Permutation> out;
    for (const auto& h : group.elements()) out.insert(conjugate(h, g));
    return {out.begin(), out.end()};
}

FiniteGroup normal_closure(const FiniteGroup& group, const Permutation& g) {
    auto gens = conjugacy_class(group, g);
    for (const auto& x : conjugacy_class(group, g.inverse())) gens.push_back(x);
    return generate_group(gens, group.degree());
}

namespace {

void require_symmetric_invariant(const FiniteGroup& group, std::span<const Permutation> set) {
    std::unordered_set<std::uint64_t> keys;
    for (const auto& s : set) {
        group.index_of(s);
        keys.insert(s.key());
    }
    for (const auto& s : set) {
        if (!keys.contains(s.inverse().key()))
            throw Error(ErrorCode::NotSymmetric, "generating set is not closed under inverses");
        for (const auto& h : group.generators())
            if (!keys.contains(conjugate(h, s).key()))
                throw Error(ErrorCode::NotConjInvariant, "generating set is not conjugation invariant");
    }
}

}  // namespace

NormTable word_norm(const FiniteGroup& group, std::span<const Permutation> generating_set) {
    require_symmetric_invariant(group, generating_set);

    std::vector<Permutation> steps;
    for (const auto& s : generating_set)
        if (!s.is_identity()) steps.push_back(s);

    NormTable table{group, std::vector<NormValue>(group.order(), kInfinity)};
    const std::size_t start = group.index_of(group.identity());
    table.values[start] = 0;
    std::deque<std::size_t> frontier{start};
    while (!frontier.empty()) {
        const std::size_t i = frontier.front();
        frontier.pop_front();
        for (const auto& s : steps) {
            const std::size_t j = group.index_of(group[i] * s);
            if (table.values[j] == kInfinity) {
                table.values[j] = table.values[i] + 1;
                frontier.push_back(j);
            }
        }
    }
    return table;
}

std::vector<Permutation> commutator_set(const FiniteGroup& group) {
    std::set<Permutation> out;
    for (const auto& a : group.elements())
        for (const auto& b : group.elements()) out.insert(commutator(a, b));
    return {out.begin(), out.end()};
}

NormTable commutator_length(const FiniteGroup& group) {
    const auto set = commutator_set(group);
    return word_norm(group, set);
}

NormTable zeta_norm(const FiniteGroup& group, const Permutation& g) {
    group.index_of(g);
    if (g.is_identity())
        throw Error(ErrorCode::IdentityGenerator, "zeta_g is undefined for g = e");
    auto set = conjugacy_class(group, g);
    for (const auto& x : conjugacy_class(group, g.inverse())) set.push_back(x);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return word_norm(group, set);
}

NormValue quotient_norm(const NormTable& q, std::span<const Permutation> subset, const Permutation& f) {
    if (subset.empty()) throw Error(ErrorCode::EmptySubset, "quotient norm needs a non-empty subset");
    NormValue best = kInfinity;
    for (const auto& a : subset) best = std::min(best, q(f * a.inverse()));
    return best;
}

std::string_view simplicity_name(Simplicity s) {
    switch (s) {
        case Simplicity::Simple: return "simple";
        case Simplicity::WeaklySimple: return "weakly simple";
        case Simplicity::NotWeaklySimple: return "not weakly simple";
    }
    return "";
}

WeaklySimpleSet weakly_simple_set(const FiniteGroup& group) {
    if (group.order() <= 1) throw Error(ErrorCode::TrivialGroup, "S_G needs a nontrivial group");
    // N(g) is constant on conjugacy classes, so evaluate one closure per class.
    std::vector<int> proper(group.order(), -1);
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (proper[i] >= 0) continue;
        const bool is_proper = normal_closure(group, group[i]).order() != group.order();
        for (const auto& c : conjugacy_class(group, group[i])) proper[group.index_of(c)] = is_proper;
    }
    WeaklySimpleSet out;
    for (std::size_t i = 0; i < group.order(); ++i)
        if (proper[i] == 1) out.members.push_back(group[i]);
    if (out.members.size() == 1)
        out.classification = Simplicity::Simple;
    else if (out.members.size() < group.order())
        out.classification = Simplicity::WeaklySimple;
    else
        out.classification = Simplicity::NotWeaklySimple;
    return out;
}

std::string norm_axiom_violation(const NormTable& q) {
    const auto& G = q.group;
    for (std::size_t i = 0; i < G.order(); ++i) {
        const auto& g = G[i];
        if ((q.values[i] == 0) != g.is_identity())
            return "value 0 must occur exactly at the identity (" + g.cycle_string() + ")";
        if (q(g.inverse()) != q.values[i]) return "asymmetric at " + g.cycle_string();
    }
    for (std::size_t i = 0; i < G.order(); ++i) {
        for (std::size_t j = 0; j < G.order(); ++j) {
            const auto& g = G[i];
            const auto& h = G[j];
            if (q(g * h) > saturating_add(q.values[i], q.values[j]))
                return "triangle inequality fails at " + g.cycle_string() + ", " + h.cycle_string();
            if (q(conjugate(h, g)) != q.values[i])
                return "not conjugation invariant at " + g.cycle_string() + ", " + h.cycle_string();
        }
    }
    return {};
}

bool is_normal_subgroup(const FiniteGroup& group, const FiniteGroup& sub) {
    for (const auto& n : sub.elements())
        if (!group.contains(n)) return false;
    for (const auto& g : group.generators())
        for (const auto& n : sub.generators())
            if (!sub.contains(conjugate(g, n))) return false;
    return true;
}

QuotientGroup quotient_group(const FiniteGroup& group, const FiniteGroup& normal) {
    if (!is_normal_subgroup(group, normal))
        throw Error(ErrorCode::InvalidInput, "subgroup is not normal");
    const std::size_t index = group.order() / normal.order();
    if (index > static_cast<std::size_t>(kMaxDegree))
        throw Error(ErrorCode::InvalidInput, "quotient index exceeds the permutation degree cap");

    // Coset table: every element is labelled by the coset xN it lies in.
    std::vector<int> label(group.order(), -1);
    QuotientGroup out;
    for (std::size_t i = 0; i < group.order(); ++i) {
        if (label[i] >= 0) continue;
        std::vector<Permutation> coset;
        for (const auto& n : normal.elements()) {
            const auto x = group[i] * n;
            label[group.index_of(x)] = static_cast<int>(out.cosets.size());
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        out.cosets.push_back(std::move(coset));
    }

    // g acts on cosets by xN -> gxN.
    const int degree = static_cast<int>(index);
    std::vector<Permutation> images(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) {
        std::vector<int> action(index);
        for (std::size_t c = 0; c < index; ++c)
            action[c] = label[group.index_of(group[i] * out.cosets[c].front())];
        images[i] = Permutation(action);
    }
    std::vector<Permutation> gens;
    for (const auto& g : group.generators()) gens.push_back(images[group.index_of(g)]);
    out.group = generate_group(gens, degree);
    out.projection.resize(group.order());
    for (std::size_t i = 0; i < group.order(); ++i) out.projection[i] = out.group.index_of(images[i]);
    return out;
}

FiniteGroup symmetric_group(int n) {
    if (n <= 1) return generate_group({}, std::max(n, 0));
    std::vector<Permutation> gens{Permutation::from_cycles(n, "(0 1)")};
    if (n > 2) {
        std::string cycle = "(";
        for (int i = 0; i < n; ++i) cycle += (i ? " " : "") + std::to_string(i);
        gens.push_back(Permutation::from_cycles(n, cycle + ")"));
    }
    return generate_group(gens, n);
}

FiniteGroup alternating_group(int n) {
    if (n < 3) return generate_group({}, std::max(n, 0));
    std::vector<Permutation> gens;
    for (int i = 2; i < n; ++i)
        gens.push_back(Permutation::from_cycles(n, "(0 1 " + std::to_string(i) + ")"));
    return generate_group(gens, n);
}

FiniteGroup cyclic_group(int n) {
    if (n <= 1) return generate_group({}, std::max(n, 1));
    std::string cycle = "(";
    for (int i = 0; i < n; ++i) cycle += (i ? " " : "") + std::to_string(i);
    const Permutation c = Permutation::from_cycles(n, cycle + ")");
    return generate_group(std::span<const Permutation>(&c, 1), n);
}

FiniteGroup klein_four() {
    const std::vector<Permutation> gens{Permutation::from_cycles(4, "(0 1)(2 3)"),
                                        Permutation::from_cycles(4, "(0 2)(1 3)")};
    return generate_group(gens, 4);
}

}  // namespace rotnorm::groups
