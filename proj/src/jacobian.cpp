#include "tropjac/jacobian.hpp"

#include <algorithm>

#include "tropjac/error.hpp"

namespace tropjac {

Rational CycleParametrization::coordinate(const Rational& t) const {
  return mod((reversed ? -t : t) - shift, length);
}

RationalPoint CycleParametrization::point_at(const Rational& lambda) const {
  const Rational t = mod(reversed ? -(lambda + shift) : lambda + shift, length);
  std::size_t k = 0;
  while (k + 1 < offsets.size() && offsets[k + 1] <= t) ++k;
  return positions[k] + (t - offsets[k]) * RationalPoint(directions[k].vec());
}

std::vector<Rational> CycleSystem::lengths() const {
  std::vector<Rational> out;
  for (const auto& c : cycles) out.push_back(c.length);
  return out;
}

namespace {

CycleParametrization parametrize(const TropicalCurve& curve, BouquetCycle cycle) {
  Rational twice_area(0);
  const std::size_t m = cycle.vertices.size();
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = curve.vertices[cycle.vertices[k]];
    const auto& b = curve.vertices[cycle.vertices[(k + 1) % m]];
    twice_area += cross(a, b);
  }
  if (twice_area.sign() < 0) {
    std::reverse(cycle.vertices.begin() + 1, cycle.vertices.end());
    std::reverse(cycle.edges.begin(), cycle.edges.end());
  }
  CycleParametrization out;
  out.vertices = cycle.vertices;
  out.edges = cycle.edges;
  Rational t(0);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = curve.vertices[cycle.vertices[k]];
    const auto& b = curve.vertices[cycle.vertices[(k + 1) % m]];
    const auto step = rational_decompose(b - a);
    out.positions.push_back(a);
    out.offsets.push_back(t);
    out.directions.push_back(step.direction);
    t += step.lattice_length;
  }
  out.length = t;
  return out;
}

// Counterclockwise parameter of a point interior to cycle edge e, given
// its lattice distance s from the edge's `from` vertex.
Rational cycle_parameter(const CycleParametrization& c, const TropicalCurve& curve, std::size_t e, const Rational& s) {
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    if (c.edges[k] != e) continue;
    if (c.vertices[k] == curve.edges[e].from) return c.offsets[k] + s;
    const Rational next = k + 1 < c.offsets.size() ? c.offsets[k + 1] : c.length;
    return next - s;
  }
  throw InvariantViolation("edge not on its cycle");
}

Rational vertex_parameter(const CycleParametrization& c, std::size_t v) {
  for (std::size_t k = 0; k < c.vertices.size(); ++k) {
    if (c.vertices[k] == v) return c.offsets[k];
  }
  throw InvariantViolation("vertex not on its cycle");
}

}  // namespace

CycleSystem parametrize_cycles(const TropicalCurve& curve, const ParametrizationOptions& options) {
  CycleSystem system;
  system.curve = curve;
  system.bunch = bunch(curve);
  const auto verdict = bouquet_structure(system.bunch);
  if (const auto* refusal = std::get_if<NotABouquet>(&verdict)) {
    throw UnsupportedHypotheses("bunch is not a bouquet: " + refusal->reason);
  }
  system.bouquet = std::get<BouquetStructure>(verdict);
  for (std::size_t i = 0; i < system.bouquet.cycles.size(); ++i) {
    auto c = parametrize(curve, system.bouquet.cycles[i]);
    if (i < options.reverse.size()) c.reversed = options.reverse[i];
    if (i < options.base_shift.size()) c.shift = options.base_shift[i];
    system.cycles.push_back(std::move(c));
  }
  system.attachment.assign(system.bunch.node_count, std::nullopt);
  for (std::size_t i = 0; i < system.cycles.size(); ++i) {
    for (std::size_t v : system.cycles[i].vertices) {
      const std::size_t node = system.bunch.node_of_vertex[v];
      if (node != system.bouquet.center_node) system.attachment[node] = std::pair{i, v};
    }
  }
  return system;
}

ProjectedPoint project_point(const CycleSystem& system, const RationalPoint& p) {
  const auto& curve = system.curve;
  const auto where = locate(curve, p);
  const auto node_image = [&](std::size_t node) -> ProjectedPoint {
    if (const auto& at = system.attachment[node]) {
      const auto& c = system.cycles[at->first];
      return {at->first, c.coordinate(vertex_parameter(c, at->second))};
    }
    return {std::nullopt, Rational(0)};
  };
  switch (where.kind) {
    case CurveLocation::Kind::off_curve:
      throw PreconditionError("point " + to_string(p) + " is not on the curve");
    case CurveLocation::Kind::vertex:
      return node_image(system.bunch.node_of_vertex[where.index]);
    case CurveLocation::Kind::ray:
      return node_image(system.bunch.node_of_vertex[curve.rays[where.index].vertex]);
    case CurveLocation::Kind::edge: {
      const std::size_t e = where.index;
      if (system.bunch.edge_class[e] == EdgeClass::tentacle) {
        return node_image(system.bunch.node_of_vertex[curve.edges[e].from]);
      }
      for (std::size_t i = 0; i < system.cycles.size(); ++i) {
        const auto& c = system.cycles[i];
        if (std::find(c.edges.begin(), c.edges.end(), e) != c.edges.end()) {
          return {i, c.coordinate(cycle_parameter(c, curve, e, where.parameter))};
        }
      }
      throw InvariantViolation("cycle edge outside every bouquet circle");
    }
  }
  throw InvariantViolation("unreachable point location");
}

std::string to_string(const AbelCoordinate& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    if (i > 0) out += ", ";
    out += a.residues[i].str() + " mod " + a.lengths[i].str();
  }
  return out + "; degree " + std::to_string(a.degree) + ")";
}

AbelCoordinate abel_coordinate(const Divisor& d, const CycleSystem& system) {
  AbelCoordinate out;
  out.lengths = system.lengths();
  out.degree = d.degree();
  std::vector<Rational> sum(system.genus(), Rational(0));
  for (const auto& [p, m] : d.terms()) {
    const auto image = project_point(system, p);
    for (std::size_t i = 0; i < system.genus(); ++i) {
      // Points off cycle i retract to O_i.
      const Rational r = image.cycle == i ? image.coordinate : system.cycles[i].coordinate(Rational(0));
      sum[i] += Rational(m) * r;
    }
  }
  for (std::size_t i = 0; i < system.genus(); ++i) out.residues.push_back(mod(sum[i], out.lengths[i]));
  return out;
}

bool linearly_equivalent(const Divisor& d1, const Divisor& d2, const TropicalCurve& curve,
                         const ParametrizationOptions& options) {
  if (!is_reduced(curve)) throw UnsupportedHypotheses("curve is not reduced (some weight exceeds 1)");
  const auto system = parametrize_cycles(curve, options);
  if (d1.degree() != d2.degree()) return false;
  return abel_coordinate(d1, system) == abel_coordinate(d2, system);
}

AbelCoordinate sigma(const CycleSystem& system, const TropicalCurve& mobile) {
  return abel_coordinate(stable_intersection(system.curve, mobile), system);
}

}  // namespace tropjac
