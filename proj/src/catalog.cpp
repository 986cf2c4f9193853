#include "rotnorm/catalog.hpp"

#include "rotnorm/error.hpp"

#include <algorithm>
#include <fstream>

namespace rotnorm::catalog {

lattice::IntLattice hopf_lattice(int m) {
    if (m < 1) throw Error(ErrorCode::InvalidInput, "need at least one fiber");
    if (m <= 2) return lattice::standard_lattice(m);
    return lattice::normalize(m, {IntVector::Constant(m, Integer(1))});
}

bool s1_action_vector(const lattice::IntLattice& a, const IntVector& degrees) {
    if (degrees.size() != a.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "degree vector has the wrong length");
    return lattice::member(a, degrees);
}

std::optional<lattice::IntLattice> vanishing_condition(const VanishingFlags& flags, int m) {
    if (flags.center_trivial && flags.pi1_injective) return lattice::zero_lattice(m);
    return std::nullopt;
}

namespace {

using io::Json;

std::optional<bounds::Status> parse_status(const std::string& s) {
    for (auto st : {bounds::Status::Bounded, bounds::Status::Unbounded, bounds::Status::Unknown})
        if (bounds::status_name(st) == s) return st;
    return std::nullopt;
}

Expected expected_from(const Json& j) {
    io::require_keys(j, {"rank", "basis", "k", "k_hat", "status"}, "expected");
    Expected e;
    e.rank = j.at("rank").get<int>();
    if (j.contains("basis")) e.basis = j["basis"].get<std::vector<std::string>>();
    if (j.contains("k")) e.k = j["k"].get<std::vector<std::string>>();
    if (j.contains("k_hat")) e.k_hat = j["k_hat"].get<std::string>();
    const auto st = parse_status(j.at("status").get<std::string>());
    if (!st) throw Error(ErrorCode::InvalidInput, "expected.status must be Bounded, Unbounded or Unknown");
    e.status = *st;
    return e;
}

}  // namespace

Fixture fixture_from(const Json& j) {
    io::require_keys(j, {"name", "note", "context", "lattice", "rank_at_most", "degrees", "vanishing", "expected"},
                     "fixture");
    Fixture f;
    f.name = j.at("name").get<std::string>();
    f.note = j.value("note", "");
    f.ctx = io::context_from(j.at("context"));
    if (j.contains("lattice")) f.lattice = io::lattice_from(j["lattice"]);
    if (j.contains("rank_at_most")) f.rank_at_most = j["rank_at_most"].get<int>();
    if (f.lattice.has_value() == f.rank_at_most.has_value())
        throw Error(ErrorCode::InvalidInput, "fixture " + f.name + " needs exactly one of lattice, rank_at_most");
    if (j.contains("degrees")) {
        for (const auto& d : j["degrees"]) f.degrees.push_back(io::int_vector_from(d));
    }
    if (j.contains("vanishing")) {
        const auto& v = j["vanishing"];
        io::require_keys(v, {"center_trivial", "pi1_injective"}, "vanishing");
        f.vanishing = VanishingFlags{v.value("center_trivial", false), v.value("pi1_injective", false)};
    }
    f.expected = expected_from(j.at("expected"));
    return f;
}

std::vector<Fixture> load_catalog(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw Error(ErrorCode::InvalidInput, "catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::vector<Fixture> out;
    for (const auto& path : files) {
        std::ifstream in(path);
        try {
            out.push_back(fixture_from(Json::parse(in)));
        } catch (const Json::exception& e) {
            throw Error(ErrorCode::InvalidInput, path.filename().string() + ": " + e.what());
        }
    }
    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i].name == out[i - 1].name) throw Error(ErrorCode::InvalidInput, "duplicate fixture " + out[i].name);
    return out;
}

const Fixture& find_fixture(const std::vector<Fixture>& catalog, const std::string& name) {
    for (const auto& f : catalog)
        if (f.name == name) return f;
    throw Error(ErrorCode::UnknownFixture, "no fixture named " + name);
}

bounds::Verdict rank_only_verdict(const bounds::ManifoldContext& ctx, int rank_at_most) {
    bounds::Verdict v;
    if (rank_at_most < ctx.m) {
        v.status = bounds::Status::Unbounded;
        v.justification = {
            "rank <= " + std::to_string(rank_at_most) + " < m = " + std::to_string(ctx.m),
            "some nonzero integer functional vanishes on A",
            "c . nu is a surjective homogeneous quasimorphism",
            "unbounded and not uniformly perfect",
        };
    } else {
        v.justification = {"a rank bound alone does not decide boundedness"};
    }
    return v;
}

CheckOutcome check_fixture(const Fixture& f) {
    CheckOutcome c;
    c.name = f.name;
    auto mismatch = [&](const std::string& what) { c.mismatches.push_back(what); };

    if (f.lattice) {
        const auto& a = *f.lattice;
        if (a.ambient_dim() != f.ctx.m) mismatch("lattice dimension differs from m");
        for (const auto& d : f.degrees)
            if (!s1_action_vector(a, d)) mismatch("degree vector " + io::vector_string(d) + " is not in A");
        if (f.vanishing) {
            if (auto forced = vanishing_condition(*f.vanishing, f.ctx.m); forced && !(*forced == a))
                mismatch("vanishing flags force A = {0}");
        }
        const auto q = lattice::quotient_info(a);
        c.computed.rank = q.rank;
        const auto basis = io::to_json(a)["basis"];
        c.computed.basis = basis.get<std::vector<std::string>>();
        for (const auto& k : q.orders) c.computed.k.push_back(lattice::order_to_string(k));
        if (q.k_hat) c.computed.k_hat = q.k_hat->str();
        c.verdict = bounds::verdict(f.ctx, a);
    } else {
        c.computed.rank = *f.rank_at_most;
        c.verdict = rank_only_verdict(f.ctx, *f.rank_at_most);
    }
    c.computed.status = c.verdict.status;

    const auto& e = f.expected;
    if (e.rank != c.computed.rank) mismatch("rank: expected " + std::to_string(e.rank));
    if (f.lattice) {
        if (e.basis != c.computed.basis) mismatch("basis differs");
        if (e.k != c.computed.k) mismatch("k differs");
        if (e.k_hat != c.computed.k_hat) mismatch("k_hat differs");
    }
    if (e.status != c.computed.status)
        mismatch(std::string("status: expected ") + std::string(bounds::status_name(e.status)));
    return c;
}

io::Json to_json(const CheckOutcome& c) {
    io::Json out;
    out["name"] = c.name;
    out["ok"] = c.ok();
    out["rank"] = c.computed.rank;
    if (!c.computed.basis.empty() || !c.computed.k.empty()) {
        out["basis"] = c.computed.basis;
        out["k"] = c.computed.k;
    }
    if (c.computed.k_hat) out["k_hat"] = *c.computed.k_hat;
    out["status"] = bounds::status_name(c.verdict.status);
    out["justification"] = c.verdict.justification;
    out["mismatches"] = c.mismatches;
    return out;
}

}  // namespace rotnorm::catalog
