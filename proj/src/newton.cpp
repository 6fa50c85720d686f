#include "tropjac/newton.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "tropjac/error.hpp"

namespace tropjac {

FaceStructure::FaceStructure(const TropicalCurve& curve) : edge_count_(curve.edges.size()) {
  check_structure(curve);
  const std::size_t darts = 2 * curve.edges.size() + 2 * curve.rays.size();
  origin_.resize(darts);
  direction_.resize(darts);
  weight_.resize(darts);
  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const auto dir = edge_geometry(curve, e).direction;
    origin_[2 * e] = curve.edges[e].from;
    origin_[2 * e + 1] = curve.edges[e].to;
    direction_[2 * e] = dir;
    direction_[2 * e + 1] = -dir;
    weight_[2 * e] = weight_[2 * e + 1] = curve.edges[e].weight;
  }
  const std::size_t base = 2 * edge_count_;
  for (std::size_t r = 0; r < curve.rays.size(); ++r) {
    origin_[base + 2 * r] = curve.rays[r].vertex;
    direction_[base + 2 * r] = curve.rays[r].direction;
    direction_[base + 2 * r + 1] = -curve.rays[r].direction;
    weight_[base + 2 * r] = weight_[base + 2 * r + 1] = curve.rays[r].weight;
  }

  outgoing_.resize(curve.vertices.size());
  std::vector<std::size_t> position(darts, 0);
  const auto stars = star_table(curve);
  for (std::size_t v = 0; v < stars.size(); ++v) {
    for (const auto& b : stars[v]) {
      std::size_t d = 0;
      switch (b.kind) {
        case Branch::Kind::edge_forward: d = 2 * b.index; break;
        case Branch::Kind::edge_backward: d = 2 * b.index + 1; break;
        case Branch::Kind::ray: d = base + 2 * b.index; break;
      }
      position[d] = outgoing_[v].size();
      outgoing_[v].push_back(d);
    }
  }

  // Circular order of rays at infinity: by angle, then parallel rays from
  // right to left.
  std::vector<std::size_t> at_infinity(curve.rays.size());
  std::iota(at_infinity.begin(), at_infinity.end(), 0);
  std::sort(at_infinity.begin(), at_infinity.end(), [&](std::size_t a, std::size_t b) {
    const auto& ra = curve.rays[a];
    const auto& rb = curve.rays[b];
    const PseudoAngle pa(ra.direction);
    const PseudoAngle pb(rb.direction);
    if (pa != pb) return pa < pb;
    return cross(RationalVector(ra.direction.vec()), curve.vertices[ra.vertex]) <
           cross(RationalVector(rb.direction.vec()), curve.vertices[rb.vertex]);
  });
  std::vector<std::size_t> ccw_next_ray(curve.rays.size());
  for (std::size_t k = 0; k < at_infinity.size(); ++k) {
    ccw_next_ray[at_infinity[k]] = at_infinity[(k + 1) % at_infinity.size()];
  }

  const auto next = [&](std::size_t d) -> std::size_t {
    if (d >= base && (d - base) % 2 == 0) {
      return base + 2 * ccw_next_ray[(d - base) / 2] + 1;
    }
    const std::size_t t = twin(d);
    const auto& around = outgoing_[*origin_[t]];
    return around[(position[t] + around.size() - 1) % around.size()];
  };

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  left_face_.assign(darts, unassigned);
  for (std::size_t start = 0; start < darts; ++start) {
    if (left_face_[start] != unassigned) continue;
    const std::size_t face = boundary_.size();
    boundary_.emplace_back();
    bool bounded = true;
    std::size_t d = start;
    do {
      if (left_face_[d] != unassigned) throw InvariantViolation("face walk re-entered a dart");
      left_face_[d] = face;
      boundary_[face].push_back(d);
      if (d >= base) bounded = false;
      d = next(d);
    } while (d != start);
    bounded_.push_back(bounded);
  }
  if (boundary_.empty()) {
    boundary_.emplace_back();
    bounded_.push_back(false);
  }
  face_count_ = boundary_.size();
}

std::optional<std::size_t> FaceStructure::origin(std::size_t dart) const { return origin_[dart]; }

std::size_t FaceStructure::element(std::size_t dart) const {
  return dart < 2 * edge_count_ ? dart / 2 : (dart - 2 * edge_count_) / 2;
}

std::size_t FaceStructure::bounded_face_count() const {
  return static_cast<std::size_t>(std::count(bounded_.begin(), bounded_.end(), true));
}

std::vector<std::size_t> FaceStructure::faces_around(std::size_t vertex) const {
  if (vertex >= outgoing_.size()) throw InputError("vertex index out of range");
  std::vector<std::size_t> out;
  for (std::size_t d : outgoing_[vertex]) out.push_back(left_face_[d]);
  return out;
}

FaceStructure face_structure(const TropicalCurve& curve) { return FaceStructure(curve); }

std::set<IntVector> NewtonComplex::point_set() const { return {dual_vertices.begin(), dual_vertices.end()}; }

std::set<std::pair<IntVector, IntVector>> NewtonComplex::segment_set() const {
  std::set<std::pair<IntVector, IntVector>> out;
  for (const auto& e : dual_edges) out.insert(e.from < e.to ? std::pair{e.from, e.to} : std::pair{e.to, e.from});
  return out;
}

NewtonComplex newton_complex(const TropicalCurve& curve, std::uint64_t traversal_seed) {
  const FaceStructure faces(curve);
  const std::size_t n = faces.face_count();
  std::vector<std::vector<std::size_t>> by_face(n);
  for (std::size_t d = 0; d < faces.dart_count(); ++d) by_face[faces.left_face(d)].push_back(d);

  std::size_t start = 0;
  if (traversal_seed != 0) {
    std::mt19937_64 rng(traversal_seed);
    start = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    for (auto& darts : by_face) std::shuffle(darts.begin(), darts.end(), rng);
  }

  std::vector<std::optional<IntVector>> w(n);
  w[start] = IntVector{};
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t d : by_face[f]) {
      const std::size_t g = faces.left_face(FaceStructure::twin(d));
      const IntVector step = faces.weight(d) * rotate_cw(faces.direction(d).vec());
      const IntVector candidate = *w[f] + step;
      if (!w[g]) {
        w[g] = candidate;
        queue.push_back(g);
      } else if (*w[g] != candidate) {
        throw InvariantViolation("Newton complex propagation is inconsistent; the curve is not balanced");
      }
    }
  }

  NewtonComplex out;
  for (std::size_t f = 0; f < n; ++f) {
    if (!w[f]) throw InvariantViolation("face unreachable during Newton complex propagation");
    out.dual_vertices.push_back(*w[f]);
  }
  const IntVector low = *std::min_element(out.dual_vertices.begin(), out.dual_vertices.end());
  for (auto& p : out.dual_vertices) p -= low;

  for (std::size_t e = 0; e < curve.edges.size(); ++e) {
    const std::size_t l = faces.left_face(2 * e);
    const std::size_t r = faces.left_face(2 * e + 1);
    out.dual_edges.push_back({l, r, out.dual_vertices[l], out.dual_vertices[r], Piece::Kind::edge, e});
  }
  const std::size_t base = 2 * curve.edges.size();
  for (std::size_t k = 0; k < curve.rays.size(); ++k) {
    const std::size_t l = faces.left_face(base + 2 * k);
    const std::size_t r = faces.left_face(base + 2 * k + 1);
    out.dual_edges.push_back({l, r, out.dual_vertices[l], out.dual_vertices[r], Piece::Kind::ray, k});
  }
  return out;
}

LatticePolygon LatticePolygon::hull(std::vector<IntVector> points) {
  if (points.empty()) throw InvariantViolation("hull of an empty point set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  LatticePolygon out;
  if (points.size() <= 2) {
    out.vertices_ = points;
    return out;
  }
  // Andrew's monotone chain, strict turns only.
  std::vector<IntVector> h(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= lower && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0) --k;
    h[k++] = p;
  }
  h.resize(k - 1);
  out.vertices_ = std::move(h);
  return out;
}

std::int64_t LatticePolygon::twice_area() const {
  std::int64_t sum = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) sum += cross(vertices_[i], vertices_[(i + 1) % n]);
  return sum;
}

std::vector<IntVector> LatticePolygon::edge_vectors() const {
  std::vector<IntVector> out;
  const std::size_t n = vertices_.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(vertices_[(i + 1) % n] - vertices_[i]);
  return out;
}

LatticePolygon LatticePolygon::translated(IntVector t) const {
  LatticePolygon out = *this;
  for (auto& v : out.vertices_) v += t;
  return out;
}

LatticePolygon newton_polygon(const TropicalCurve& curve) {
  return LatticePolygon::hull(newton_complex(curve).dual_vertices);
}

namespace {

std::vector<IntVector> chain(const IntVector& start, std::vector<IntVector> edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const IntVector& a, const IntVector& b) { return PseudoAngle(a) < PseudoAngle(b); });
  std::vector<IntVector> points{start};
  for (const auto& e : edges) points.push_back(points.back() + e);
  if (points.back() != start) throw InvariantViolation("edge vectors do not close up");
  return points;
}

IntVector bottom_left(const LatticePolygon& p) {
  return *std::min_element(p.vertices().begin(), p.vertices().end(),
                           [](const IntVector& a, const IntVector& b) { return std::tie(a.y, a.x) < std::tie(b.y, b.x); });
}

}  // namespace

LatticePolygon newton_polygon_from_rays(const TropicalCurve& curve) {
  std::vector<IntVector> edges;
  for (const auto& r : curve.rays) edges.push_back(rotate_ccw(r.weight * r.direction.vec()));
  return LatticePolygon::hull(chain(IntVector{}, std::move(edges))).normalized();
}

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q) {
  // Chaining sorted edge vectors from the bottom-left corner visits the
  // boundary counterclockwise.
  auto edges = p.edge_vectors();
  const auto more = q.edge_vectors();
  edges.insert(edges.end(), more.begin(), more.end());
  return LatticePolygon::hull(chain(bottom_left(p) + bottom_left(q), std::move(edges)));
}

DualCell dual_cell(const TropicalCurve& curve, std::size_t vertex) {
  if (vertex >= curve.vertices.size()) throw InputError("vertex index out of range");
  const FaceStructure faces(curve);
  const auto complex = newton_complex(curve);
  std::vector<IntVector> points;
  for (std::size_t f : faces.faces_around(vertex)) points.push_back(complex.dual_vertices[f]);
  return {LatticePolygon::hull(points)};
}

LatticePolygon dual_cell_from_star(const std::vector<Branch>& star) {
  std::vector<IntVector> edges;
  for (const auto& b : star) edges.push_back(rotate_ccw(b.weighted()));
  return LatticePolygon::hull(chain(IntVector{}, std::move(edges)));
}

std::int64_t vertex_multiplicity(const TropicalCurve& curve, std::size_t vertex) {
  if (vertex >= curve.vertices.size()) throw InputError("vertex index out of range");
  return dual_cell_from_star(star_table(curve)[vertex]).twice_area();
}

std::int64_t multiplicity_at(const TropicalCurve& curve, const RationalPoint& p) {
  for (std::size_t v = 0; v < curve.vertices.size(); ++v) {
    if (curve.vertices[v] == p) return vertex_multiplicity(curve, v);
  }
  return 0;
}

TropicalCurve star_curve(const LatticePolygon& polygon, const RationalPoint& apex) {
  TropicalCurve out;
  out.vertices.push_back(apex);
  for (const auto& e : polygon.edge_vectors()) {
    const auto d = primitive_decompose(rotate_cw(e));
    out.rays.push_back({0, d.direction, d.lattice_length});
  }
  return out;
}

}  // namespace tropjac
