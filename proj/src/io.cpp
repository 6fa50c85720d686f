#include "tropjac/io.hpp"

#include <fstream>
#include <sstream>

#include "tropjac/error.hpp"

namespace tropjac::io {

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object()) schema(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::int64_t integer_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) schema(field, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t index_from_json(const json& j, const std::string& field) {
  const auto v = integer_from_json(j, field);
  if (v < 0) schema(field, "expected a non-negative index");
  return static_cast<std::size_t>(v);
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) schema(field, "expected a rational string such as \"3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    schema(field, e.what());
  }
}

json to_json(const RationalPoint& p) { return json::array({to_json(p.x), to_json(p.y)}); }

RationalPoint point_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) schema(field, "expected a pair [x, y]");
  return {rational_from_json(j[0], field + "[0]"), rational_from_json(j[1], field + "[1]")};
}

json to_json(IntVector v) { return json::array({v.x, v.y}); }

json to_json(const TropicalCurve& curve) {
  json out = json::object();
  out["vertices"] = json::array();
  for (const auto& v : curve.vertices) out["vertices"].push_back(to_json(v));
  out["edges"] = json::array();
  for (const auto& e : curve.edges) out["edges"].push_back({{"v", json::array({e.from, e.to})}, {"w", e.weight}});
  out["rays"] = json::array();
  for (const auto& r : curve.rays) {
    out["rays"].push_back({{"v", r.vertex}, {"dir", json::array({r.direction.x(), r.direction.y()})}, {"w", r.weight}});
  }
  return out;
}

TropicalCurve curve_from_json(const json& j) {
  if (!j.is_object()) schema("", "expected a curve object");
  for (const auto& [key, value] : j.items()) {
    if (key != "vertices" && key != "edges" && key != "rays") schema(key, "unknown field");
  }
  TropicalCurve curve;
  const auto& vertices = member(j, "vertices", "");
  if (!vertices.is_array()) schema("vertices", "expected an array");
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    curve.vertices.push_back(point_from_json(vertices[k], "vertices[" + std::to_string(k) + "]"));
  }
  if (j.contains("edges")) {
    const auto& edges = j["edges"];
    if (!edges.is_array()) schema("edges", "expected an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const std::string field = "edges[" + std::to_string(k) + "]";
      const auto& ends = member(edges[k], "v", field);
      if (!ends.is_array() || ends.size() != 2) schema(field + ".v", "expected a pair of vertex indices");
      FiniteEdge e;
      e.from = index_from_json(ends[0], field + ".v[0]");
      e.to = index_from_json(ends[1], field + ".v[1]");
      e.weight = edges[k].contains("w") ? integer_from_json(edges[k]["w"], field + ".w") : 1;
      if (e.weight <= 0) schema(field + ".w", "weight must be positive");
      curve.edges.push_back(e);
    }
  }
  if (j.contains("rays")) {
    const auto& rays = j["rays"];
    if (!rays.is_array()) schema("rays", "expected an array");
    for (std::size_t k = 0; k < rays.size(); ++k) {
      const std::string field = "rays[" + std::to_string(k) + "]";
      Ray r;
      r.vertex = index_from_json(member(rays[k], "v", field), field + ".v");
      const auto& dir = member(rays[k], "dir", field);
      if (!dir.is_array() || dir.size() != 2) schema(field + ".dir", "expected an integer pair");
      const IntVector d{integer_from_json(dir[0], field + ".dir[0]"), integer_from_json(dir[1], field + ".dir[1]")};
      if (!PrimitiveVector::is_primitive(d)) schema(field + ".dir", "direction must be primitive");
      r.direction = PrimitiveVector(d);
      r.weight = rays[k].contains("w") ? integer_from_json(rays[k]["w"], field + ".w") : 1;
      if (r.weight <= 0) schema(field + ".w", "weight must be positive");
      curve.rays.push_back(r);
    }
  }
  check_structure(curve);
  return curve;
}

json to_json(const Divisor& d) {
  json out = json::array();
  for (const auto& [p, m] : d.terms()) out.push_back({{"point", to_json(p)}, {"multiplicity", m}});
  return out;
}

Divisor divisor_from_json(const json& j) {
  if (!j.is_array()) schema("", "expected a divisor array");
  Divisor d;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string field = "[" + std::to_string(k) + "]";
    const auto p = point_from_json(member(j[k], "point", field), field + ".point");
    const auto m = integer_from_json(member(j[k], "multiplicity", field), field + ".multiplicity");
    d.add(p, m);
  }
  return d;
}

json to_json(const LatticePolygon& p) {
  json out = json::array();
  for (const auto& v : p.vertices()) out.push_back(to_json(v));
  return out;
}

json to_json(const NewtonComplex& n) {
  json points = json::array();
  for (const auto& p : n.point_set()) points.push_back(to_json(p));
  json segments = json::array();
  for (const auto& [a, b] : n.segment_set()) segments.push_back(json::array({to_json(a), to_json(b)}));
  return {{"points", points}, {"segments", segments}};
}

json to_json(const AbelCoordinate& a) {
  json residues = json::array();
  for (const auto& r : a.residues) residues.push_back(to_json(r));
  json lengths = json::array();
  for (const auto& l : a.lengths) lengths.push_back(to_json(l));
  return {{"residues", residues}, {"lengths", lengths}, {"degree", a.degree}};
}

json to_json(const ParamPoint& p) {
  json lengths = json::array();
  for (const auto& l : p.lengths) lengths.push_back(to_json(l));
  return {{"lengths", lengths}, {"anchor_vertex", p.anchor_vertex}, {"anchor", to_json(p.anchor)}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

TropicalCurve read_curve(const std::string& path) { return curve_from_json(read_json_file(path)); }

Divisor read_divisor(const std::string& path) { return divisor_from_json(read_json_file(path)); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace tropjac::io
