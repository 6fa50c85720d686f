#include "tropjac/param_space.hpp"

#include <deque>
#include <map>
#include <random>

#include "tropjac/error.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/linalg.hpp"

namespace tropjac {

ParamPoint params_from_curve(const TropicalCurve& curve, std::size_t anchor_vertex) {
  check_structure(curve);
  if (anchor_vertex >= curve.vertices.size()) throw PreconditionError("anchor vertex index out of range");
  if (!is_connected(curve)) throw PreconditionError("curve is disconnected; its parameter space is not a cone");
  ParamPoint p;
  p.type.vertex_count = curve.vertices.size();
  p.type.edges = curve.edges;
  p.type.rays = curve.rays;
  p.type.complex = newton_complex(curve);
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const auto g = edge_geometry(curve, e);
    p.type.directions.push_back(g.direction);
    p.lengths.push_back(g.lattice_length);
  }
  p.anchor_vertex = anchor_vertex;
  p.anchor = curve.vertices[anchor_vertex];
  return p;
}

namespace {

struct Tree {
  std::vector<std::optional<std::size_t>> parent_edge;
  std::vector<bool> reached;
};

Tree spanning_tree(const CombinatorialType& type, std::size_t root) {
  std::vector<std::vector<std::size_t>> incident(type.vertex_count);
  for (std::size_t e = 0; e < type.edges.size(); ++e) {
    incident[type.edges[e].from].push_back(e);
    incident[type.edges[e].to].push_back(e);
  }
  Tree t{std::vector<std::optional<std::size_t>>(type.vertex_count), std::vector<bool>(type.vertex_count, false)};
  if (type.vertex_count == 0) return t;
  std::deque<std::size_t> queue{root};
  t.reached[root] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      const std::size_t w = type.edges[e].from == v ? type.edges[e].to : type.edges[e].from;
      if (t.reached[w]) continue;
      t.reached[w] = true;
      t.parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  return t;
}

// Signed edges from v up to the root.
std::map<std::size_t, int> path_to_root(const CombinatorialType& type, const Tree& t, std::size_t v) {
  std::map<std::size_t, int> out;
  while (t.parent_edge[v]) {
    const std::size_t e = *t.parent_edge[v];
    out[e] += type.edges[e].from == v ? 1 : -1;
    v = type.edges[e].from == v ? type.edges[e].to : type.edges[e].from;
  }
  return out;
}

std::string cycle_name(const ClosureCycle& c) {
  std::string out = "[";
  for (const auto& [e, s] : c) {
    if (out.size() > 1) out += ", ";
    out += (s > 0 ? "+e" : "-e") + std::to_string(e);
  }
  return out + "]";
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<ClosureCycle> closure_cycles(const CombinatorialType& type) {
  std::vector<ClosureCycle> out;
  if (type.vertex_count == 0) return out;
  const Tree t = spanning_tree(type, 0);
  std::vector<bool> in_tree(type.edges.size(), false);
  for (const auto& pe : t.parent_edge) {
    if (pe) in_tree[*pe] = true;
  }
  for (std::size_t e = 0; e < type.edges.size(); ++e) {
    if (in_tree[e] || !t.reached[type.edges[e].from]) continue;
    // from -> to along e, back to the root from `to`, then down to `from`.
    std::map<std::size_t, int> signs{{e, 1}};
    for (const auto& [f, s] : path_to_root(type, t, type.edges[e].to)) signs[f] += s;
    for (const auto& [f, s] : path_to_root(type, t, type.edges[e].from)) signs[f] -= s;
    ClosureCycle c;
    for (const auto& [f, s] : signs) {
      if (s != 0) c.emplace_back(f, s);
    }
    out.push_back(std::move(c));
  }
  return out;
}

TropicalCurve curve_from_params(const ParamPoint& p) {
  const auto& type = p.type;
  if (p.lengths.size() != type.edges.size() || type.directions.size() != type.edges.size()) {
    throw InputError("parameter point has " + std::to_string(p.lengths.size()) + " lengths for " +
                     std::to_string(type.edges.size()) + " edges");
  }
  if (p.anchor_vertex >= type.vertex_count) throw PreconditionError("anchor vertex index out of range");
  for (std::size_t e = 0; e < p.lengths.size(); ++e) {
    if (p.lengths[e].sign() <= 0) throw PreconditionError("length of edge " + std::to_string(e) + " is not positive");
  }
  for (const auto& c : closure_cycles(type)) {
    RationalPoint sum;
    for (const auto& [e, s] : c) sum += Rational(s) * p.lengths[e] * RationalPoint(type.directions[e].vec());
    if (!sum.is_zero()) throw PreconditionError("closure equation fails on cycle " + cycle_name(c));
  }

  const Tree t = spanning_tree(type, p.anchor_vertex);
  TropicalCurve curve;
  curve.vertices.resize(type.vertex_count);
  curve.edges = type.edges;
  curve.rays = type.rays;
  for (std::size_t v = 0; v < type.vertex_count; ++v) {
    if (!t.reached[v]) throw PreconditionError("combinatorial type is disconnected");
  }
  // Place vertices in breadth-first order so every parent is known first.
  std::deque<std::size_t> queue{p.anchor_vertex};
  std::vector<bool> placed(type.vertex_count, false);
  curve.vertices[p.anchor_vertex] = p.anchor;
  placed[p.anchor_vertex] = true;
  std::vector<std::vector<std::size_t>> incident(type.vertex_count);
  for (std::size_t e = 0; e < type.edges.size(); ++e) {
    incident[type.edges[e].from].push_back(e);
    incident[type.edges[e].to].push_back(e);
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : incident[v]) {
      const bool forward = type.edges[e].from == v;
      const std::size_t w = forward ? type.edges[e].to : type.edges[e].from;
      if (placed[w]) continue;
      const RationalPoint step = p.lengths[e] * RationalPoint(type.directions[e].vec());
      curve.vertices[w] = forward ? curve.vertices[v] + step : curve.vertices[v] - step;
      placed[w] = true;
      queue.push_back(w);
    }
  }
  return curve;
}

ParamPoint perturb(const ParamPoint& p, std::uint64_t seed, const PerturbOptions& options) {
  std::mt19937_64 rng(seed);
  const auto draw = [&] {
    const auto span = static_cast<std::uint64_t>(2 * options.max_multiple + 1);
    return static_cast<std::int64_t>(rng() % span) - options.max_multiple;
  };
  ParamPoint out = p;

  const std::size_t l = p.lengths.size();
  if (l > 0) {
    RationalMatrix m;
    for (const auto& c : closure_cycles(p.type)) {
      std::vector<Rational> rx(l, Rational(0));
      std::vector<Rational> ry(l, Rational(0));
      for (const auto& [e, s] : c) {
        rx[e] += Rational(s * p.type.directions[e].x());
        ry[e] += Rational(s * p.type.directions[e].y());
      }
      m.push_back(std::move(rx));
      m.push_back(std::move(ry));
    }
    std::vector<Rational> delta(l, Rational(0));
    for (const auto& b : integer_null_space(m, l)) {
      const Rational k(draw());
      for (std::size_t i = 0; i < l; ++i) delta[i] += k * Rational(b[i]);
    }
    Rational h = options.length_scale;
    const auto fits = [&] {
      for (std::size_t i = 0; i < l; ++i) {
        if ((p.lengths[i] + h * delta[i]).sign() <= 0) return false;
      }
      return true;
    };
    while (!h.is_zero() && !fits()) h /= Rational(2);
    for (std::size_t i = 0; i < l; ++i) out.lengths[i] = p.lengths[i] + h * delta[i];
  }

  const Rational dx = options.anchor_scale * Rational(draw());
  const Rational dy = options.anchor_scale * Rational(draw());
  out.anchor = p.anchor + RationalPoint(dx, dy);
  if (options.anchor_box) {
    const auto& [lo, hi] = *options.anchor_box;
    const auto reflect = [](Rational x, const Rational& a, const Rational& b) {
      if (x > b) x = b + b - x;
      if (x < a) x = a + a - x;
      return min(max(x, a), b);
    };
    out.anchor = {reflect(out.anchor.x, lo.x, hi.x), reflect(out.anchor.y, lo.y, hi.y)};
  }
  return out;
}

namespace {

bool on_segment(const IntVector& x, const IntVector& a, const IntVector& b) {
  if (cross(b - a, x - a) != 0) return false;
  return dot(x - a, b - a) >= 0 && dot(x - b, a - b) >= 0;
}

bool covered(const IntVector& x, const std::set<std::pair<IntVector, IntVector>>& segments,
             const std::set<IntVector>& points) {
  if (points.count(x) != 0) return true;
  for (const auto& [a, b] : segments) {
    if (on_segment(x, a, b)) return true;
  }
  return false;
}

}  // namespace

bool is_degeneration(const TropicalCurve& candidate, const TropicalCurve& reference) {
  if (newton_polygon(candidate) != newton_polygon(reference)) return false;
  const auto small = newton_complex(candidate);
  const auto big = newton_complex(reference);
  const auto points = big.point_set();
  const auto segments = big.segment_set();
  for (const auto& x : small.point_set()) {
    if (!covered(x, segments, points)) return false;
  }
  for (const auto& [a, b] : small.segment_set()) {
    const auto split = primitive_decompose(b - a);
    for (std::int64_t k = 0; k < split.lattice_length; ++k) {
      const IntVector s = a + k * split.direction.vec();
      const IntVector t = s + split.direction.vec();
      bool inside = false;
      for (const auto& [c, d] : segments) {
        if (on_segment(s, c, d) && on_segment(t, c, d)) {
          inside = true;
          break;
        }
      }
      if (!inside) return false;
    }
  }
  return true;
}

bool same_component(const TropicalCurve& a, const TropicalCurve& b) { return newton_polygon(a) == newton_polygon(b); }

std::vector<WalkRecord> walk_sigma(const CycleSystem& host, const TropicalCurve& mobile, std::size_t steps,
                                   std::uint64_t seed, const PerturbOptions& options) {
  std::vector<WalkRecord> out;
  ParamPoint p = params_from_curve(mobile, 0);
  for (std::size_t k = 0; k <= steps; ++k) {
    if (k > 0) p = perturb(p, mix(seed ^ mix(k)), options);
    const auto curve = curve_from_params(p);
    out.push_back({k, p, sigma(host, curve), is_transversal(host.curve, curve)});
  }
  return out;
}

}  // namespace tropjac
