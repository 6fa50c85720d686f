#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tropjac/curve.hpp"

namespace tropjac {

/// Faces of the complement of a curve, found by walking darts with the face
/// on the left. Unbounded faces close up through an explicit circular order
/// of the rays at infinity, so no bounding box is involved.
///
/// Dart numbering: finite edge e gives darts 2e (from -> to) and 2e+1
/// (to -> from); ray r gives 2E+2r (outward) and 2E+2r+1 (inward), E the
/// number of finite edges. The twin of d is d ^ 1.
class FaceStructure {
 public:
  explicit FaceStructure(const TropicalCurve& curve);

  std::size_t face_count() const { return face_count_; }
  std::size_t dart_count() const { return left_face_.size(); }
  static std::size_t twin(std::size_t dart) { return dart ^ 1U; }

  std::size_t left_face(std::size_t dart) const { return left_face_[dart]; }
  /// Vertex the dart leaves from; nullopt for an inward ray dart.
  std::optional<std::size_t> origin(std::size_t dart) const;
  PrimitiveVector direction(std::size_t dart) const { return direction_[dart]; }
  std::int64_t weight(std::size_t dart) const { return weight_[dart]; }
  bool is_ray_dart(std::size_t dart) const { return dart >= 2 * edge_count_; }
  /// Curve edge or ray index the dart runs along.
  std::size_t element(std::size_t dart) const;

  const std::vector<std::size_t>& boundary(std::size_t face) const { return boundary_[face]; }
  bool bounded(std::size_t face) const { return bounded_[face]; }
  std::size_t bounded_face_count() const;

  /// Faces incident to a vertex in counterclockwise order (face k lies
  /// between outgoing branch k and k+1 of the star).
  std::vector<std::size_t> faces_around(std::size_t vertex) const;

 private:
  std::size_t edge_count_ = 0;
  std::size_t face_count_ = 0;
  std::vector<std::optional<std::size_t>> origin_;
  std::vector<PrimitiveVector> direction_;
  std::vector<std::int64_t> weight_;
  std::vector<std::size_t> left_face_;
  std::vector<std::vector<std::size_t>> boundary_;
  std::vector<bool> bounded_;
  std::vector<std::vector<std::size_t>> outgoing_;  // per vertex, ccw
};

FaceStructure face_structure(const TropicalCurve& curve);

struct DualEdge {
  std::size_t left_face = 0;
  std::size_t right_face = 0;
  IntVector from;  ///< dual vertex of left_face
  IntVector to;    ///< dual vertex of right_face
  Piece::Kind crosses = Piece::Kind::edge;
  std::size_t crosses_index = 0;
};

/// Lattice dual of a curve: one point per complementary face, one segment
/// per edge or ray. Translated so the lexicographically smallest point is
/// the origin.
struct NewtonComplex {
  std::vector<IntVector> dual_vertices;  ///< indexed by face
  std::vector<DualEdge> dual_edges;

  std::set<IntVector> point_set() const;
  /// Segments as ordered endpoint pairs (smaller first).
  std::set<std::pair<IntVector, IntVector>> segment_set() const;

  friend bool operator==(const NewtonComplex& a, const NewtonComplex& b) {
    return a.point_set() == b.point_set() && a.segment_set() == b.segment_set();
  }
};

/// Propagates w_right - w_left = weight * rotate_cw(direction) across every
/// dart. traversal_seed = 0 is plain breadth-first order from face 0; other
/// seeds pick a random start face and neighbour order. Throws
/// InvariantViolation if two routes disagree.
NewtonComplex newton_complex(const TropicalCurve& curve, std::uint64_t traversal_seed = 0);

/// Convex lattice polygon stored as its extreme points in counterclockwise
/// order starting at the lexicographic minimum. Segments and points are
/// allowed.
class LatticePolygon {
 public:
  LatticePolygon() : vertices_{IntVector{}} {}
  static LatticePolygon hull(std::vector<IntVector> points);

  const std::vector<IntVector>& vertices() const { return vertices_; }
  std::int64_t twice_area() const;
  Rational area() const { return Rational(twice_area(), 2); }
  std::vector<IntVector> edge_vectors() const;
  LatticePolygon translated(IntVector t) const;
  /// Translated so the first vertex sits at the origin.
  LatticePolygon normalized() const { return translated(-vertices_.front()); }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<IntVector> vertices_;
};

/// Convex hull of the Newton complex.
LatticePolygon newton_polygon(const TropicalCurve& curve);

/// Same polygon from ray data alone: rotate each weighted ray direction a
/// quarter turn counterclockwise, sort by angle, chain. Normalized.
LatticePolygon newton_polygon_from_rays(const TropicalCurve& curve);

LatticePolygon minkowski_sum(const LatticePolygon& p, const LatticePolygon& q);

struct DualCell {
  LatticePolygon polygon;
  Rational area() const { return polygon.area(); }
};

/// Hull of the dual points of the faces around the vertex, placed inside the
/// Newton complex. Throws InputError if `vertex` is out of range.
DualCell dual_cell(const TropicalCurve& curve, std::size_t vertex);

/// The closed chain of quarter-turned weighted branch vectors, at the
/// origin.
LatticePolygon dual_cell_from_star(const std::vector<Branch>& star);

/// Twice the area of the dual cell.
std::int64_t vertex_multiplicity(const TropicalCurve& curve, std::size_t vertex);

/// vertex_multiplicity at p if p is a vertex, 0 otherwise.
std::int64_t multiplicity_at(const TropicalCurve& curve, const RationalPoint& p);

/// The one-vertex curve with Newton polygon `polygon`: a ray along the
/// outward normal of each polygon edge, weighted by its lattice length.
TropicalCurve star_curve(const LatticePolygon& polygon, const RationalPoint& apex);

}  // namespace tropjac
