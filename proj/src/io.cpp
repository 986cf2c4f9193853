#include "rotnorm/io.hpp"

#include "rotnorm/error.hpp"

#include <sstream>

namespace rotnorm::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) invalid(std::string(what) + " is missing \"" + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const char* what) {
    const Json& a = field(j, key, what);
    if (!a.is_array()) invalid(std::string(what) + ": \"" + key + "\" must be an array");
    return a;
}

bool bool_or(const Json& j, const char* key, bool fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) invalid(std::string("\"") + key + "\" must be true or false");
    return it->get<bool>();
}

int int_field(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_number_integer()) invalid(std::string(what) + ": \"" + key + "\" must be an integer");
    return v.get<int>();
}

Json str(const Rational& r) { return to_string(r); }
Json str(const Integer& z) { return z.str(); }

}  // namespace

Rational rational_from(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    invalid("expected a rational as a string or an integer");
}

Integer integer_from(const Json& j) {
    const Rational r = rational_from(j);
    if (denom(r) != 1) invalid("expected an integer, got " + to_string(r));
    return numer(r);
}

std::string vector_string(const RatVector& v) {
    std::string out;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += to_string(v(i));
    }
    return out;
}

std::string vector_string(const IntVector& v) { return vector_string(to_rational(v)); }

RatVector vector_from(const Json& j) {
    std::vector<Rational> values;
    if (j.is_string()) {
        values = parse_rational_list(j.get<std::string>());
    } else if (j.is_array()) {
        for (const auto& e : j) values.push_back(rational_from(e));
    } else {
        invalid("expected a vector as \"a,b,...\" or an array");
    }
    RatVector v(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
    return v;
}

IntVector int_vector_from(const Json& j) {
    const RatVector v = vector_from(j);
    IntVector z(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (denom(v(i)) != 1) invalid("expected an integer vector, got " + vector_string(v));
        z(i) = numer(v(i));
    }
    return z;
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what) {
    if (!j.is_object()) invalid(std::string(what) + " must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) invalid(std::string(what) + ": unknown key \"" + key + "\"");
    }
}

lattice::IntLattice lattice_from(const Json& j) {
    require_keys(j, {"m", "generators"}, "lattice");
    const int m = int_field(j, "m", "lattice");
    std::vector<IntVector> gens;
    if (j.contains("generators")) {
        for (const auto& g : array_field(j, "generators", "lattice")) gens.push_back(int_vector_from(g));
    }
    return lattice::normalize(m, gens);
}

Json to_json(const lattice::IntLattice& a) {
    Json basis = Json::array();
    for (Eigen::Index r = 0; r < a.basis().rows(); ++r) basis.push_back(vector_string(IntVector(a.basis().row(r).transpose())));
    return Json{{"m", a.ambient_dim()}, {"rank", a.rank()}, {"basis", basis}};
}

Json order_json(const lattice::Order& k) { return lattice::order_to_string(k); }

Json to_json(const lattice::QuotientInfo& q) {
    Json out;
    out["rank"] = q.rank;
    Json ks = Json::array();
    for (const auto& k : q.orders) ks.push_back(order_json(k));
    out["k"] = ks;
    out["k_max"] = order_json(q.k);
    out["k_hat"] = q.k_hat ? str(*q.k_hat) : Json(nullptr);
    Json inv = Json::array();
    for (const auto& d : q.invariant_factors) inv.push_back(str(d));
    out["invariant_factors"] = inv;
    out["index"] = q.index ? str(*q.index) : Json("inf");
    if (q.cyclic_generator) out["cyclic_generator"] = str(*q.cyclic_generator);
    out["extension"] = q.extension;
    return out;
}

bounds::ManifoldContext context_from(const Json& j) {
    require_keys(j, {"n", "m", "connected", "topology", "regularity", "assumption_P"}, "context");
    const int n = int_field(j, "n", "context");
    const int m = int_field(j, "m", "context");
    bounds::Topology topology = bounds::Topology::Closed;
    if (j.contains("topology")) {
        const auto t = j["topology"];
        if (t == "closed") topology = bounds::Topology::Closed;
        else if (t == "open") topology = bounds::Topology::Open;
        else invalid("context: topology must be \"closed\" or \"open\"");
    }
    bounds::Regularity regularity = bounds::Regularity::Smooth;
    if (j.contains("regularity")) {
        const auto r = j["regularity"];
        if (r == "smooth") regularity = bounds::Regularity::Smooth;
        else if (r == "finite_r") regularity = bounds::Regularity::FiniteR;
        else invalid("context: regularity must be \"smooth\" or \"finite_r\"");
    }
    return bounds::ManifoldContext::make(n, m, bool_or(j, "connected", true), topology, regularity,
                                         bool_or(j, "assumption_P", false));
}

Json to_json(const bounds::ManifoldContext& ctx) {
    return Json{{"n", ctx.n},
                {"m", ctx.m},
                {"connected", ctx.connected},
                {"topology", bounds::topology_name(ctx.closed_or_open)},
                {"regularity", bounds::regularity_name(ctx.regularity)},
                {"assumption_P", ctx.assumption_P}};
}

namespace {

circle::PLCircleDiffeo diffeo_from(const Json& j) {
    if (j.is_object()) {
        require_keys(j, {"rotation"}, "frame");
        return circle::PLCircleDiffeo::rotation(rational_from(field(j, "rotation", "frame")));
    }
    if (!j.is_array()) invalid("a frame is a list of [x, y] breakpoints or {\"rotation\": a}");
    std::vector<circle::Breakpoint> points;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) invalid("a breakpoint is a pair [x, y]");
        points.push_back({rational_from(p[0]), rational_from(p[1])});
    }
    return circle::PLCircleDiffeo(std::move(points));
}

}  // namespace

circle::PLIsotopy isotopy_from(const Json& j) {
    require_keys(j, {"times", "frames"}, "isotopy");
    std::vector<Rational> times;
    for (const auto& t : array_field(j, "times", "isotopy")) times.push_back(rational_from(t));
    std::vector<circle::PLCircleDiffeo> frames;
    for (const auto& f : array_field(j, "frames", "isotopy")) frames.push_back(diffeo_from(f));
    return circle::PLIsotopy(std::move(times), std::move(frames));
}

Json to_json(const circle::PLIsotopy& f) {
    Json times = Json::array(), frames = Json::array();
    for (const auto& t : f.times()) times.push_back(str(t));
    for (const auto& frame : f.frames()) {
        Json points = Json::array();
        for (const auto& p : frame.breakpoints()) points.push_back(Json::array({str(p.x), str(p.y)}));
        frames.push_back(points);
    }
    return Json{{"times", times}, {"frames", frames}};
}

circle::MultiIsotopy multi_isotopy_from(const Json& j) {
    require_keys(j, {"components", "basepoints"}, "multi-isotopy");
    std::vector<circle::PLIsotopy> components;
    for (const auto& c : array_field(j, "components", "multi-isotopy")) components.push_back(isotopy_from(c));
    std::vector<Rational> basepoints;
    if (j.contains("basepoints")) {
        for (const auto& p : array_field(j, "basepoints", "multi-isotopy")) basepoints.push_back(rational_from(p));
    } else {
        basepoints.assign(components.size(), Rational(0));
    }
    return circle::MultiIsotopy(std::move(components), std::move(basepoints));
}

Json to_json(const cvp::NearestData& d) {
    Json points = Json::array();
    for (const auto& p : d.points) points.push_back(vector_string(p));
    return Json{{"theta", str(d.theta)}, {"points", points}};
}

Json to_json(const cvp::ThetaSup& s) {
    if (s.infinite) return Json{{"lo", "inf"}, {"hi", "inf"}, {"exact", true}};
    return Json{{"lo", str(s.lo)}, {"hi", str(s.hi)}, {"exact", s.exact()}};
}

Json to_json(const bounds::Bound& b) { return bounds::to_string(b); }

Json to_json(const bounds::BoundLedger& ledger) {
    Json entries = Json::object();
    for (auto q : bounds::kQuantities) {
        if (!ledger.has(q)) continue;
        const auto e = ledger.get(q);
        entries[std::string(bounds::quantity_name(q))] =
            Json{{"lower", to_json(e.lower)}, {"upper", to_json(e.upper)}, {"rules", e.rules}};
    }
    return entries;
}

Json to_json(const bounds::Verdict& v) {
    return Json{{"status", bounds::status_name(v.status)}, {"justification", v.justification}};
}

Json to_json(const defect::DefectReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"id", c.id},
                              {"statement", c.statement},
                              {"bound", str(c.bound)},
                              {"strict", c.strict},
                              {"max", str(c.max)},
                              {"violations", c.violations}});
    }
    return Json{{"seed", r.seed},
                {"trials", r.trials},
                {"wide_trials", r.wide_trials},
                {"violations", r.total_violations()},
                {"checks", checks}};
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (j.is_array()) {
        out << prefix << ":";
        for (const auto& e : j) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
        out << '\n';
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

}  // namespace

std::string to_text(const Json& j) {
    std::ostringstream out;
    flatten(j, "", out);
    return out.str();
}

}  // namespace rotnorm::io
