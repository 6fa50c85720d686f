#include "tropjac/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tropjac/error.hpp"
#include "tropjac/pieces.hpp"

namespace tropjac {

RationalDecomposition edge_geometry(const TropicalCurve& curve, std::size_t e) {
  const auto& edge = curve.edges.at(e);
  return rational_decompose(curve.vertices.at(edge.to) - curve.vertices.at(edge.from));
}

std::vector<std::vector<Branch>> star_table(const TropicalCurve& curve) {
  std::vector<std::vector<Branch>> table(curve.vertices.size());
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const auto& edge = curve.edges[e];
    const auto geometry = edge_geometry(curve, e);
    table[edge.from].push_back({Branch::Kind::edge_forward, e, geometry.direction, edge.weight});
    table[edge.to].push_back({Branch::Kind::edge_backward, e, -geometry.direction, edge.weight});
  }
  for (std::size_t r = 0; r < curve.rays.size(); ++r) {
    const auto& ray = curve.rays[r];
    table[ray.vertex].push_back({Branch::Kind::ray, r, ray.direction, ray.weight});
  }
  for (auto& branches : table) {
    std::stable_sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
      return PseudoAngle(a.direction) < PseudoAngle(b.direction);
    });
  }
  return table;
}

void check_structure(const TropicalCurve& curve) {
  const std::size_t n = curve.vertices.size();
  std::set<RationalPoint> seen;
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen.insert(curve.vertices[v]).second) {
      throw InputError("vertex " + std::to_string(v) + " coincides with an earlier vertex at " +
                       to_string(curve.vertices[v]));
    }
  }
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const auto& edge = curve.edges[e];
    if (edge.from >= n || edge.to >= n) throw InputError("edge " + std::to_string(e) + " has a vertex index out of range");
    if (edge.from == edge.to) throw InputError("edge " + std::to_string(e) + " is a loop");
    if (edge.weight < 1) throw InputError("edge " + std::to_string(e) + " has non-positive weight");
  }
  for (std::size_t r = 0; r < curve.rays.size(); ++r) {
    const auto& ray = curve.rays[r];
    if (ray.vertex >= n) throw InputError("ray " + std::to_string(r) + " has a vertex index out of range");
    if (ray.weight < 1) throw InputError("ray " + std::to_string(r) + " has non-positive weight");
  }
}

std::optional<Rational> Piece::parameter_of(const RationalPoint& p) const {
  const RationalVector d = p - origin;
  if (!cross(d, direction.vec()).is_zero()) return std::nullopt;
  return dot(d, direction.vec()) / Rational(dot(direction.vec(), direction.vec()));
}

bool Piece::contains_parameter(const Rational& s) const {
  return s.sign() >= 0 && (!length || s <= *length);
}

std::vector<Piece> pieces(const TropicalCurve& curve) {
  std::vector<Piece> out;
  out.reserve(curve.edges.size() + curve.rays.size());
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const auto geometry = edge_geometry(curve, e);
    out.push_back({Piece::Kind::edge, e, curve.vertices[curve.edges[e].from], geometry.direction,
                   geometry.lattice_length, curve.edges[e].weight});
  }
  for (std::size_t r = 0; r < curve.rays.size(); ++r) {
    const auto& ray = curve.rays[r];
    out.push_back({Piece::Kind::ray, r, curve.vertices[ray.vertex], ray.direction, std::nullopt, ray.weight});
  }
  return out;
}

std::optional<CollinearContact> collinear_contact(const Piece& p, const Piece& q) {
  if (cross(p.direction.vec(), q.direction.vec()) != 0) return std::nullopt;
  const auto start = p.parameter_of(q.origin);
  if (!start) return std::nullopt;
  const bool same_way = dot(p.direction.vec(), q.direction.vec()) > 0;
  // q's extent in p's parameter, as [q_lo, q_hi] with absent = infinite.
  std::optional<Rational> q_lo;
  std::optional<Rational> q_hi;
  if (same_way) {
    q_lo = *start;
    if (q.length) q_hi = *start + *q.length;
  } else {
    q_hi = *start;
    if (q.length) q_lo = *start - *q.length;
  }
  Rational lo = q_lo ? max(Rational(0), *q_lo) : Rational(0);
  std::optional<Rational> hi = p.length;
  if (q_hi) hi = hi ? min(*hi, *q_hi) : *q_hi;
  if (hi && *hi < lo) return std::nullopt;
  return CollinearContact{lo, hi};
}

std::optional<PieceCrossing> piece_crossing(const Piece& p, const Piece& q) {
  const std::int64_t denom = cross(p.direction.vec(), q.direction.vec());
  if (denom == 0) return std::nullopt;
  const RationalVector d = q.origin - p.origin;
  const Rational s = cross(d, q.direction.vec()) / Rational(denom);
  const Rational t = cross(d, p.direction.vec()) / Rational(denom);
  if (!p.contains_parameter(s) || !q.contains_parameter(t)) return std::nullopt;
  return PieceCrossing{s, t};
}

namespace {

bool at_end(const Piece& p, const Rational& s) { return s.is_zero() || (p.length && s == *p.length); }

std::string piece_name(const Piece& p) {
  return (p.kind == Piece::Kind::edge ? "edge " : "ray ") + std::to_string(p.index);
}

}  // namespace

BalanceReport validate(const TropicalCurve& curve) {
  check_structure(curve);
  BalanceReport report;
  const auto stars = star_table(curve);
  report.residuals.resize(curve.vertices.size());
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    IntVector sum;
    for (const auto& branch : stars[v]) sum += branch.weighted();
    report.residuals[v] = sum;
    if (!sum.is_zero()) report.balanced = false;
    for (std::size_t k = 0; k + 1 < stars[v].size(); ++k) {
      if (PseudoAngle(stars[v][k].direction) == PseudoAngle(stars[v][k + 1].direction)) {
        report.embedding_issues.push_back("two branches leave vertex " + std::to_string(v) + " in direction " +
                                          to_string(stars[v][k].direction.vec()));
      }
    }
  }

  const auto all = pieces(curve);
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    for (const auto& p : all) {
      const auto s = p.parameter_of(curve.vertices[v]);
      if (s && p.contains_parameter(*s) && !at_end(p, *s)) {
        report.embedding_issues.push_back("vertex " + std::to_string(v) + " lies inside " + piece_name(p));
      }
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (const auto hit = piece_crossing(all[i], all[j])) {
        if (!at_end(all[i], hit->s) && !at_end(all[j], hit->t)) {
          report.embedding_issues.push_back(piece_name(all[i]) + " crosses " + piece_name(all[j]) + " at " +
                                            to_string(all[i].at(hit->s)));
        }
      } else if (const auto contact = collinear_contact(all[i], all[j]); contact && contact->positive_length()) {
        report.embedding_issues.push_back(piece_name(all[i]) + " overlaps " + piece_name(all[j]));
      }
    }
  }
  return report;
}

CurveLocation locate(const TropicalCurve& curve, const RationalPoint& p) {
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    if (curve.vertices[v] == p) return {CurveLocation::Kind::vertex, v, Rational(0)};
  }
  for (const auto& piece : pieces(curve)) {
    const auto s = piece.parameter_of(p);
    if (s && s->sign() > 0 && (!piece.length || *s < *piece.length)) {
      return {piece.kind == Piece::Kind::edge ? CurveLocation::Kind::edge : CurveLocation::Kind::ray, piece.index, *s};
    }
  }
  return {};
}

bool inside_polygon(const std::vector<RationalPoint>& polygon, const RationalPoint& p) {
  bool inside = false;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const auto& a = polygon[i];
    const auto& b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const Rational x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

namespace {

/// Crossing parameters of piece with the loop, sorted; throws on any
/// non-transversal contact.
std::vector<Rational> loop_crossings(const Piece& piece, const std::vector<RationalPoint>& loop) {
  std::vector<Rational> out;
  const std::size_t n = loop.size();
  for (std::size_t k = 0; k < n; ++k) {
    const RationalPoint& a = loop[k];
    const RationalVector e = loop[(k + 1) % n] - a;
    const IntVector u = piece.direction.vec();
    const Rational denom = cross(RationalVector(u), e);
    const RationalVector d = a - piece.origin;
    if (denom.is_zero()) {
      if (cross(d, u).is_zero()) {
        // Collinear: any shared point is a tangency.
        const Rational s0 = dot(d, u) / Rational(dot(u, u));
        const Rational s1 = dot(d + e, u) / Rational(dot(u, u));
        const Rational lo = min(s0, s1);
        const Rational hi = max(s0, s1);
        const bool disjoint = hi.sign() < 0 || (piece.length && *piece.length < lo);
        if (!disjoint) throw PreconditionError("loop runs along " + piece_name(piece));
      }
      continue;
    }
    const Rational s = cross(d, e) / denom;
    const Rational r = cross(d, RationalVector(u)) / denom;
    if (r.sign() < 0 || r > Rational(1) || !piece.contains_parameter(s)) continue;
    if (at_end(piece, s)) throw PreconditionError("loop passes through a curve vertex");
    if (r.is_zero() || r == Rational(1)) throw PreconditionError("loop corner lies on " + piece_name(piece));
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw PreconditionError("loop is not simple where it meets " + piece_name(piece));
  }
  return out;
}

/// Visits each crossing with the weighted primitive vector oriented from
/// inside to outside, based at the piece origin (a point on the edge line).
template <typename Visit>
void for_each_outward_crossing(const TropicalCurve& curve, const std::vector<RationalPoint>& loop, Visit&& visit) {
  if (loop.size() < 3) throw PreconditionError("loop needs at least three corners");
  for (const auto& v : curve.vertices) {
    // Vertices on the loop boundary are caught per piece; isolated vertices here.
    for (std::size_t k = 0; k < loop.size(); ++k) {
      const RationalPoint& a = loop[k];
      const RationalPoint& b = loop[(k + 1) % loop.size()];
      if (cross(b - a, v - a).is_zero()) {
        const Rational t = (v.x - a.x) * (b.x - a.x) + (v.y - a.y) * (b.y - a.y);
        const Rational len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        if (t.sign() >= 0 && t <= len2) throw PreconditionError("loop passes through vertex " + to_string(v));
      }
    }
  }
  for (const auto& piece : pieces(curve)) {
    const auto crossings = loop_crossings(piece, loop);
    if (crossings.empty()) continue;
    bool inside = inside_polygon(loop, piece.origin);
    const IntVector w = piece.weight * piece.direction.vec();
    for (std::size_t c = 0; c < crossings.size(); ++c) {
      visit(inside ? w : -w, piece.origin);
      inside = !inside;
    }
  }
}

}  // namespace

IntVector global_balance_sum(const TropicalCurve& curve, const std::vector<RationalPoint>& loop) {
  IntVector sum;
  for_each_outward_crossing(curve, loop, [&](IntVector u, const RationalPoint&) { sum += u; });
  return sum;
}

Rational moment_sum(const TropicalCurve& curve, const std::vector<RationalPoint>& loop, const RationalPoint& p0) {
  Rational sum;
  for_each_outward_crossing(curve, loop, [&](IntVector u, const RationalPoint& base) { sum += moment(u, base, p0); });
  return sum;
}

TropicalCurve translate(const TropicalCurve& curve, const RationalVector& t) {
  TropicalCurve out = curve;
  for (auto& v : out.vertices) v += t;
  return out;
}

TropicalCurve negate(const TropicalCurve& curve) {
  TropicalCurve out = curve;
  for (auto& v : out.vertices) v = RationalPoint(-v.x, -v.y);
  for (auto& r : out.rays) r.direction = -r.direction;
  return out;
}

TropicalCurve canonical(const TropicalCurve& curve) {
  std::vector<std::size_t> order(curve.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return curve.vertices[a] < curve.vertices[b]; });
  std::vector<std::size_t> rank(order.size());
  TropicalCurve out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rank[order[k]] = k;
    out.vertices.push_back(curve.vertices[order[k]]);
  }
  for (const auto& e : curve.edges) {
    const std::size_t a = rank[e.from];
    const std::size_t b = rank[e.to];
    out.edges.push_back({std::min(a, b), std::max(a, b), e.weight});
  }
  for (const auto& r : curve.rays) out.rays.push_back({rank[r.vertex], r.direction, r.weight});
  std::sort(out.edges.begin(), out.edges.end(), [](const FiniteEdge& a, const FiniteEdge& b) {
    return std::tie(a.from, a.to, a.weight) < std::tie(b.from, b.to, b.weight);
  });
  std::sort(out.rays.begin(), out.rays.end(), [](const Ray& a, const Ray& b) {
    return std::tie(a.vertex, a.direction, a.weight) < std::tie(b.vertex, b.direction, b.weight);
  });
  return out;
}

TropicalCurve normalize(const TropicalCurve& input) {
  TropicalCurve curve = input;
  for (;;) {
    const auto stars = star_table(curve);
    std::optional<std::size_t> fuse;
    for (std::size_t v = 0; v < curve.vertices.size() && !fuse; ++v) {
      const auto& s = stars[v];
      if (s.size() != 2 || s[0].weight != s[1].weight || s[0].direction != -s[1].direction) continue;
      if (s[0].kind == Branch::Kind::ray && s[1].kind == Branch::Kind::ray) continue;  // a bare line keeps its vertex
      fuse = v;
    }
    if (!fuse) return curve;
    const std::size_t v = *fuse;
    const auto& s = stars[v];
    const auto other_end = [&](const Branch& b) {
      const auto& e = curve.edges[b.index];
      return e.from == v ? e.to : e.from;
    };
    TropicalCurve next;
    std::vector<std::size_t> remap(curve.vertices.size());
    for (std::size_t k = 0, j = 0; k < curve.vertices.size(); ++k) {
      if (k == v) continue;
      remap[k] = j++;
      next.vertices.push_back(curve.vertices[k]);
    }
    std::set<std::size_t> dropped_edges;
    for (const auto& b : s) {
      if (b.kind != Branch::Kind::ray) dropped_edges.insert(b.index);
    }
    for (std::size_t e = 0; e < curve.edges.size(); ++e) {
      if (dropped_edges.count(e)) continue;
      next.edges.push_back({remap[curve.edges[e].from], remap[curve.edges[e].to], curve.edges[e].weight});
    }
    for (std::size_t r = 0; r < curve.rays.size(); ++r) {
      if (curve.rays[r].vertex == v) continue;
      next.rays.push_back({remap[curve.rays[r].vertex], curve.rays[r].direction, curve.rays[r].weight});
    }
    if (s[0].kind != Branch::Kind::ray && s[1].kind != Branch::Kind::ray) {
      next.edges.push_back({remap[other_end(s[0])], remap[other_end(s[1])], s[0].weight});
    } else {
      const Branch& edge = s[0].kind == Branch::Kind::ray ? s[1] : s[0];
      const Branch& ray = s[0].kind == Branch::Kind::ray ? s[0] : s[1];
      next.rays.push_back({remap[other_end(edge)], ray.direction, ray.weight});
    }
    curve = std::move(next);
  }
}

bool is_connected(const TropicalCurve& curve) {
  const std::size_t n = curve.vertices.size();
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : curve.edges) {
    const auto a = find(e.from);
    const auto b = find(e.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

bool is_reduced(const TropicalCurve& curve) {
  return std::all_of(curve.edges.begin(), curve.edges.end(), [](const FiniteEdge& e) { return e.weight == 1; }) &&
         std::all_of(curve.rays.begin(), curve.rays.end(), [](const Ray& r) { return r.weight == 1; });
}

}  // namespace tropjac
