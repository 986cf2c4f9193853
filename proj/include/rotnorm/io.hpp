#pragma once

// JSON encodings shared by the CLI and the catalog. Rationals and integers are
// written as strings ("p/q", "-3"); infinity is "inf". Vectors of rationals are
// comma-joined strings, matching the --offset syntax on the command line.

#include "rotnorm/bounds.hpp"
#include "rotnorm/circle.hpp"
#include "rotnorm/coset.hpp"
#include "rotnorm/defect.hpp"
#include "rotnorm/lattice.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>

namespace rotnorm::io {

using Json = nlohmann::ordered_json;

/// Accepts a string "p/q" or a JSON integer.
Rational rational_from(const Json& j);
Integer integer_from(const Json& j);

std::string vector_string(const RatVector& v);
std::string vector_string(const IntVector& v);
RatVector vector_from(const Json& j);
/// Same, rejecting non-integer entries.
IntVector int_vector_from(const Json& j);

/// Throws InvalidInput when `j` is not an object or has a key outside `allowed`.
void require_keys(const Json& j, std::initializer_list<const char*> allowed, const char* what);

/// {"m": 3, "generators": [["1","1","1"]]}; generators may be omitted for A = {0}.
lattice::IntLattice lattice_from(const Json& j);
Json to_json(const lattice::IntLattice& a);
Json to_json(const lattice::QuotientInfo& q);
Json order_json(const lattice::Order& k);

/// {"n", "m", "connected", "topology", "regularity", "assumption_P"}; only n and m are required.
bounds::ManifoldContext context_from(const Json& j);
Json to_json(const bounds::ManifoldContext& ctx);

/// {"times": [...], "frames": [[[x, y], ...], ...]}; a frame may also be {"rotation": a}.
circle::PLIsotopy isotopy_from(const Json& j);
Json to_json(const circle::PLIsotopy& f);
/// {"components": [isotopy, ...], "basepoints": [...]}.
circle::MultiIsotopy multi_isotopy_from(const Json& j);

Json to_json(const cvp::NearestData& d);
Json to_json(const cvp::ThetaSup& s);
Json to_json(const bounds::Bound& b);
Json to_json(const bounds::BoundLedger& ledger);
Json to_json(const bounds::Verdict& v);
Json to_json(const defect::DefectReport& r);

/// Flat "key: value" lines for --format text.
std::string to_text(const Json& j);

}  // namespace rotnorm::io
