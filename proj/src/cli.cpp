#include "rotnorm/cli.hpp"

#include "rotnorm/catalog.hpp"
#include "rotnorm/error.hpp"
#include "rotnorm/groups.hpp"
#include "rotnorm/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifndef ROTNORM_DEFAULT_CATALOG_DIR
#define ROTNORM_DEFAULT_CATALOG_DIR "data/catalog"
#endif

namespace rotnorm::cli {

namespace {

using io::Json;

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
    }
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used, 10);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || text.front() == '-')
        throw Error(ErrorCode::InvalidInput, "seed must be a nonnegative integer, got '" + text + "'");
    return v;
}

groups::FiniteGroup named_group(const std::string& name) {
    if (name == "V4") return groups::klein_four();
    if (name.size() >= 2) {
        const char kind = name.front();
        const std::string digits = name.substr(1);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 2) {
            const int n = std::stoi(digits);
            if (n >= 1 && n <= groups::kMaxDegree) {
                if (kind == 'S' && n <= 8) return groups::symmetric_group(n);
                if (kind == 'A' && n <= 9) return groups::alternating_group(n);
                if (kind == 'C') return groups::cyclic_group(n);
            }
        }
    }
    throw Error(ErrorCode::InvalidInput, "unknown group '" + name + "' (use Sn, An, Cn or V4)");
}

std::vector<groups::Permutation> parse_permutations(int degree, const std::string& text) {
    std::vector<groups::Permutation> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto semi = text.find(';', start);
        out.push_back(groups::Permutation::from_cycles(degree, text.substr(start, semi == std::string::npos
                                                                                     ? std::string::npos
                                                                                     : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

Json norm_json(const groups::NormTable& q) {
    Json values = Json::object();
    for (std::size_t i = 0; i < q.values.size(); ++i)
        values[q.group[i].cycle_string()] = groups::norm_to_string(q.values[i]);
    return Json{{"sup", groups::norm_to_string(q.sup())}, {"values", values}};
}

struct Options {
    std::string format = "json";
    std::string in, lattice, context, offset, theta, epsilon = "1/16", point = "0", member, dir, fixture;
    std::string group, generators, zeta;
    int degree = 0;
    std::uint64_t trials = 1000;
    std::string seed = "1";
    bool theta_sup = false;
};

Json run_group(const Options& o) {
    groups::FiniteGroup g;
    if (!o.group.empty() + !o.generators.empty() + !o.in.empty() > 1)
        throw Error(ErrorCode::InvalidInput, "give one of --group, --generators, --in");
    if (!o.in.empty()) {
        // a list of image arrays, all of one degree
        const Json j = read_json(o.in);
        if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "group input must be a list of image arrays");
        std::vector<groups::Permutation> gens;
        for (const auto& images : j) {
            const auto v = images.get<std::vector<int>>();
            if (!gens.empty() && gens.front().degree() != static_cast<int>(v.size()))
                throw Error(ErrorCode::InvalidInput, "generators of different degrees");
            gens.emplace_back(std::span<const int>(v));
        }
        g = groups::generate_group(gens, gens.empty() ? 1 : gens.front().degree());
    } else if (!o.group.empty()) {
        g = named_group(o.group);
    } else if (!o.generators.empty()) {
        if (o.degree < 1 || o.degree > groups::kMaxDegree)
            throw Error(ErrorCode::InvalidInput, "--generators needs --degree in [1, 12]");
        const auto gens = parse_permutations(o.degree, o.generators);
        g = groups::generate_group(gens, o.degree);
    } else {
        throw Error(ErrorCode::InvalidInput, "group needs --group, --generators or --in");
    }
    Json out;
    out["degree"] = g.degree();
    out["order"] = g.order();
    out["commutator_length"] = norm_json(groups::commutator_length(g));
    if (g.order() > 1) {
        const auto ws = groups::weakly_simple_set(g);
        Json members = Json::array();
        for (const auto& p : ws.members) members.push_back(p.cycle_string());
        out["weakly_simple_set"] = Json{{"members", members}, {"classification", groups::simplicity_name(ws.classification)}};
    }
    if (!o.zeta.empty()) {
        const auto elem = groups::Permutation::from_cycles(g.degree(), o.zeta);
        out["zeta"] = norm_json(groups::zeta_norm(g, elem));
    }
    return out;
}

Json run_lattice(const Options& o) {
    const auto a = io::lattice_from(read_json(o.in));
    const auto q = lattice::quotient_info(a);
    Json out = io::to_json(q);
    out["basis"] = io::to_json(a)["basis"];
    if (!a.full_rank()) out["kernel_functional"] = io::vector_string(lattice::kernel_functional(a));
    if (!o.member.empty()) {
        const IntVector v = io::int_vector_from(Json(o.member));
        if (v.size() != a.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "--member has the wrong length");
        out["member"] = lattice::member(a, v);
    }
    if (o.theta_sup) out["theta_sup"] = io::to_json(cvp::theta_sup(a, parse_rational(o.epsilon)));
    return out;
}

Json run_coset(const Options& o) {
    const auto a = io::lattice_from(read_json(o.lattice));
    const RatVector x = io::vector_from(Json(o.offset));
    if (x.size() != a.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "--offset has the wrong length");
    const cvp::AffineCoset z(a, x);
    Json out = io::to_json(cvp::theta(z));
    out["offset"] = io::vector_string(z.offset());
    if (a.full_rank()) out["canonical"] = io::vector_string(cvp::canonical_rep(z));
    return out;
}

Json run_mu(const Options& o) {
    const auto f = io::isotopy_from(read_json(o.in));
    const Rational p = parse_rational(o.point);
    return Json{{"point", to_string(p)}, {"mu", to_string(circle::mu(f, p))}};
}

Json run_nu(const Options& o) {
    const auto f = io::multi_isotopy_from(read_json(o.in));
    Json out;
    out["nu"] = io::vector_string(circle::nu(f));
    if (!o.lattice.empty()) {
        const auto z = circle::nu_hat(f, io::lattice_from(read_json(o.lattice)));
        Json coset = io::to_json(cvp::theta(z));
        coset["offset"] = io::vector_string(z.offset());
        out["coset"] = coset;
    }
    return out;
}

Json run_defect(const Options& o) {
    std::uint64_t seed = parse_seed(o.seed);
    if (const char* env = std::getenv("ROTNORM_SEED"); env && *env) seed = parse_seed(env);
    return io::to_json(defect::defect_experiment(seed, o.trials));
}

Json run_bounds(const Options& o) {
    if (o.theta.empty() && o.lattice.empty()) throw Error(ErrorCode::InvalidInput, "bounds needs --theta or --lattice");
    const auto ctx = io::context_from(read_json(o.context));
    Json out;
    out["context"] = io::to_json(ctx);
    bounds::BoundLedger ledger;
    if (!o.theta.empty()) {
        const Rational theta = parse_rational(o.theta);
        out["theta"] = to_string(theta);
        ledger = bounds::element_ledger(ctx, theta);
    }
    if (!o.lattice.empty()) {
        const auto a = io::lattice_from(read_json(o.lattice));
        if (a.ambient_dim() != ctx.m) throw Error(ErrorCode::DimensionMismatch, "lattice dimension differs from m");
        std::optional<cvp::ThetaSup> sup;
        if (ctx.m >= 2 && a.full_rank()) sup = cvp::theta_sup(a, parse_rational(o.epsilon));
        if (sup) out["theta_sup"] = io::to_json(*sup);
        ledger = bounds::merge(ledger, bounds::diameter_ledger(ctx, lattice::quotient_info(a), sup));
    }
    out["entries"] = io::to_json(ledger);
    return out;
}

Json run_verdict(const Options& o) {
    const auto ctx = io::context_from(read_json(o.context));
    return io::to_json(bounds::verdict(ctx, io::lattice_from(read_json(o.lattice))));
}

std::string catalog_dir(const Options& o) {
    if (!o.dir.empty()) return o.dir;
    if (const char* env = std::getenv("ROTNORM_CATALOG_DIR"); env && *env) return env;
    return ROTNORM_DEFAULT_CATALOG_DIR;
}

Json run_catalog_list(const Options& o) {
    Json list = Json::array();
    for (const auto& f : catalog::load_catalog(catalog_dir(o)))
        list.push_back(Json{{"name", f.name}, {"note", f.note}, {"context", io::to_json(f.ctx)}});
    return Json{{"fixtures", list}};
}

Json run_catalog_check(const Options& o, bool& all_ok) {
    const auto fixtures = catalog::load_catalog(catalog_dir(o));
    Json results = Json::array();
    all_ok = true;
    for (const auto& f : fixtures) {
        if (!o.fixture.empty() && f.name != o.fixture) continue;
        const auto c = catalog::check_fixture(f);
        all_ok = all_ok && c.ok();
        results.push_back(catalog::to_json(c));
    }
    if (!o.fixture.empty()) {
        if (results.empty()) catalog::find_fixture(fixtures, o.fixture);  // throws UnknownFixture
        return results.front();
    }
    return Json{{"results", results}};
}

void error_json(std::ostream& err, std::string_view name, const std::string& message) {
    err << Json{{"error", name}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact norms, coset representatives, rotation quasimorphisms and bound certificates", "rotnorm"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* group = app.add_subcommand("group", "Commutator length and weakly simple set of a finite group");
    group->add_option("--group", o.group, "Named group: Sn, An, Cn or V4");
    group->add_option("--generators", o.generators, "Generators in cycle notation separated by ';'");
    group->add_option("--degree", o.degree, "Point count for --generators");
    group->add_option("--in", o.in, "JSON list of generator image arrays, '-' for stdin");
    group->add_option("--zeta", o.zeta, "Also tabulate the norm generated by this element's conjugates");

    auto* lat = app.add_subcommand("lattice", "Quotient invariants of a sublattice of Z^m");
    lat->add_option("--in", o.in, "Lattice JSON, '-' for stdin")->required();
    lat->add_option("--member", o.member, "Test membership of a vector \"a,b,...\"");
    lat->add_flag("--theta-sup", o.theta_sup, "Bound the sup of theta over all cosets");
    lat->add_option("--epsilon", o.epsilon, "Interval width for --theta-sup");

    auto* coset = app.add_subcommand("coset", "Minimal sup-norm points of x + A");
    coset->add_option("--lattice", o.lattice, "Lattice JSON")->required();
    coset->add_option("--offset", o.offset, "Offset \"a,b,...\"")->required();

    auto* mu = app.add_subcommand("mu", "Rotation quasimorphism of a circle isotopy");
    mu->add_option("--in", o.in, "Isotopy JSON, '-' for stdin")->required();
    mu->add_option("--point", o.point, "Basepoint in [0, 1)");

    auto* nu = app.add_subcommand("nu", "Rotation vector of a multi-circle isotopy");
    nu->add_option("--in", o.in, "Multi-isotopy JSON, '-' for stdin")->required();
    nu->add_option("--lattice", o.lattice, "Also reduce nu modulo this lattice");

    auto* def = app.add_subcommand("defect", "Randomized check of the quasimorphism inequalities");
    def->add_option("--trials", o.trials, "Number of random pairs")->check(CLI::PositiveNumber);
    def->add_option("--seed", o.seed, "Seed; ROTNORM_SEED overrides it");

    auto* bnd = app.add_subcommand("bounds", "Bound ledger for an element and/or the whole group");
    bnd->add_option("--context", o.context, "Context JSON")->required();
    bnd->add_option("--theta", o.theta, "Coset norm of the element");
    bnd->add_option("--lattice", o.lattice, "Lattice JSON for diameter bounds");
    bnd->add_option("--epsilon", o.epsilon, "Interval width for the sup of theta");

    auto* ver = app.add_subcommand("verdict", "Boundedness verdict with its rule chain");
    ver->add_option("--context", o.context, "Context JSON")->required();
    ver->add_option("--lattice", o.lattice, "Lattice JSON")->required();

    auto* cat = app.add_subcommand("catalog", "Named example fixtures");
    cat->require_subcommand(1);
    cat->fallthrough();
    auto* cat_list = cat->add_subcommand("list", "List fixtures");
    cat_list->add_option("--dir", o.dir, "Fixture directory");
    auto* cat_check = cat->add_subcommand("check", "Recompute fixtures and compare");
    cat_check->add_option("name", o.fixture, "Fixture name; all when omitted");
    cat_check->add_option("--dir", o.dir, "Fixture directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        error_json(err, "InvalidInput", e.what());
        return 1;
    }

    int status = 0;
    Json result;
    try {
        if (*group) result = run_group(o);
        else if (*lat) result = run_lattice(o);
        else if (*coset) result = run_coset(o);
        else if (*mu) result = run_mu(o);
        else if (*nu) result = run_nu(o);
        else if (*def) result = run_defect(o);
        else if (*bnd) result = run_bounds(o);
        else if (*ver) result = run_verdict(o);
        else if (*cat_list) result = run_catalog_list(o);
        else if (*cat_check) {
            bool all_ok = true;
            result = run_catalog_check(o, all_ok);
            // a fixture that no longer reproduces is an internal inconsistency
            if (!all_ok) status = 2;
        }
    } catch (const Error& e) {
        error_json(err, e.name(), e.what());
        return e.is_inconsistency() ? 2 : 1;
    } catch (const Json::exception& e) {
        error_json(err, "InvalidInput", e.what());
        return 1;
    } catch (const std::exception& e) {
        error_json(err, "Internal", e.what());
        return 2;
    }

    if (o.format == "text") out << io::to_text(result);
    else out << result.dump(2) << '\n';
    return status;
}

}  // namespace rotnorm::cli
