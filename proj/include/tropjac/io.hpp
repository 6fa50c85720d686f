#pragma once

#include <json.hpp>

#include <string>

#include "tropjac/curve.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/newton.hpp"
#include "tropjac/param_space.hpp"

namespace tropjac::io {

using nlohmann::json;

/// Rationals are written as "p" or "p/q" strings. Integers and such strings
/// are accepted on input.
json to_json(const Rational& r);
Rational rational_from_json(const json& j, const std::string& field);

json to_json(const RationalPoint& p);
RationalPoint point_from_json(const json& j, const std::string& field);

json to_json(IntVector v);

/// {"vertices": [["x","y"],...], "edges": [{"v":[i,j],"w":n},...],
///  "rays": [{"v":i,"dir":[a,b],"w":n},...]}
json to_json(const TropicalCurve& curve);
/// Throws InputError naming the offending field. Structural checks
/// (indices, weights, primitivity) happen here too.
TropicalCurve curve_from_json(const json& j);

/// [{"point": ["x","y"], "multiplicity": n}, ...]
json to_json(const Divisor& d);
Divisor divisor_from_json(const json& j);

json to_json(const LatticePolygon& p);
json to_json(const NewtonComplex& n);
json to_json(const AbelCoordinate& a);
json to_json(const ParamPoint& p);

/// Reads and parses a JSON file; InputError if unreadable or malformed.
json read_json_file(const std::string& path);

TropicalCurve read_curve(const std::string& path);
Divisor read_divisor(const std::string& path);

/// Canonical text form: two-space indentation, sorted keys, trailing newline.
std::string dump(const json& j);

}  // namespace tropjac::io
