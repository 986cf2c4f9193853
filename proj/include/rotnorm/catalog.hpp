#pragma once

// Named (manifold, circles) examples. Each fixture carries its lattice A, or only
// an upper bound on its rank, plus the expected quotient data and verdict; the
// check recomputes both and compares. Topological facts enter as flags.

#include "rotnorm/bounds.hpp"
#include "rotnorm/io.hpp"
#include "rotnorm/lattice.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rotnorm::catalog {

/// A = Z for one fiber, Z^2 for two, and the diagonal Z(1,...,1) from three on.
lattice::IntLattice hopf_lattice(int m);

/// An S^1-action whose orbit maps have these degrees forces the degree vector into A.
bool s1_action_vector(const lattice::IntLattice& a, const IntVector& degrees);

struct VanishingFlags {
    bool center_trivial = false;
    bool pi1_injective = false;
};

/// Both flags force A = {0}; otherwise nothing is asserted.
std::optional<lattice::IntLattice> vanishing_condition(const VanishingFlags& flags, int m);

struct Expected {
    int rank = 0;                          // for rank-only fixtures, an upper bound
    std::vector<std::string> basis;        // comma-joined rows, empty for rank-only fixtures
    std::vector<std::string> k;            // per-circle orders, "inf" allowed
    std::optional<std::string> k_hat;
    bounds::Status status = bounds::Status::Unknown;
    friend bool operator==(const Expected&, const Expected&) = default;
};

struct Fixture {
    std::string name;
    std::string note;
    bounds::ManifoldContext ctx;
    std::optional<lattice::IntLattice> lattice;  // absent: only rank_at_most is known
    std::optional<int> rank_at_most;
    std::vector<IntVector> degrees;              // asserted members of A
    std::optional<VanishingFlags> vanishing;
    Expected expected;
};

Fixture fixture_from(const io::Json& j);

/// Every *.json file under `dir`, sorted by fixture name. Names must be unique.
std::vector<Fixture> load_catalog(const std::filesystem::path& dir);
/// Throws UnknownFixture.
const Fixture& find_fixture(const std::vector<Fixture>& catalog, const std::string& name);

/// Verdict from a rank bound alone; Unknown unless the bound is below m.
bounds::Verdict rank_only_verdict(const bounds::ManifoldContext& ctx, int rank_at_most);

struct CheckOutcome {
    std::string name;
    Expected computed;
    bounds::Verdict verdict;
    std::vector<std::string> mismatches;  // empty when the fixture reproduces
    bool ok() const { return mismatches.empty(); }
};

CheckOutcome check_fixture(const Fixture& f);

io::Json to_json(const CheckOutcome& c);

}  // namespace rotnorm::catalog
