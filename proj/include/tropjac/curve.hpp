#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropjac/geom.hpp"

namespace tropjac {

struct FiniteEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t weight = 1;

  friend bool operator==(const FiniteEdge&, const FiniteEdge&) = default;
};

struct Ray {
  std::size_t vertex = 0;
  PrimitiveVector direction;
  std::int64_t weight = 1;

  friend bool operator==(const Ray&, const Ray&) = default;
};

/// A weighted rational-slope 1-complex in the plane. A value type: every
/// operation returns a new curve.
struct TropicalCurve {
  std::vector<RationalPoint> vertices;
  std::vector<FiniteEdge> edges;
  std::vector<Ray> rays;

  friend bool operator==(const TropicalCurve&, const TropicalCurve&) = default;
};

/// One edge or ray leaving a vertex.
struct Branch {
  enum class Kind { edge_forward, edge_backward, ray };
  Kind kind = Kind::edge_forward;
  std::size_t index = 0;
  PrimitiveVector direction;
  std::int64_t weight = 1;

  IntVector weighted() const { return weight * direction.vec(); }
};

/// Direction and lattice length of finite edge e, oriented from -> to.
RationalDecomposition edge_geometry(const TropicalCurve& curve, std::size_t e);

/// Branches at every vertex, each list sorted counterclockwise by
/// pseudo-angle starting from the positive x-axis.
std::vector<std::vector<Branch>> star_table(const TropicalCurve& curve);

/// Throws InputError for out-of-range indices, non-positive weights,
/// coincident vertices and degenerate edges.
void check_structure(const TropicalCurve& curve);

struct BalanceReport {
  std::vector<IntVector> residuals;
  bool balanced = true;
  /// Embedding problems: overlapping branches at a vertex, crossing edges,
  /// vertices inside edges.
  std::vector<std::string> embedding_issues;

  bool valid() const { return balanced && embedding_issues.empty(); }
};

/// Structural errors throw InputError; imbalance and embedding problems are
/// reported.
BalanceReport validate(const TropicalCurve& curve);

/// A finite edge or a ray seen as a parametrized piece origin + s*direction
/// with s in [0, length] (length absent for rays). The parameter counts
/// lattice length.
struct Piece {
  enum class Kind { edge, ray };
  Kind kind = Kind::edge;
  std::size_t index = 0;
  RationalPoint origin;
  PrimitiveVector direction;
  std::optional<Rational> length;
  std::int64_t weight = 1;

  RationalPoint at(const Rational& s) const { return origin + s * RationalPoint(direction.vec()); }
  /// Parameter of p if p lies on the supporting line; nullopt otherwise.
  std::optional<Rational> parameter_of(const RationalPoint& p) const;
  bool contains_parameter(const Rational& s) const;
};

std::vector<Piece> pieces(const TropicalCurve& curve);

struct CurveLocation {
  enum class Kind { off_curve, vertex, edge, ray };
  Kind kind = Kind::off_curve;
  std::size_t index = 0;
  /// Lattice-length parameter from the edge's `from` vertex or the ray's
  /// vertex (zero for vertices).
  Rational parameter;

  bool on_curve() const { return kind != Kind::off_curve; }
};

CurveLocation locate(const TropicalCurve& curve, const RationalPoint& p);

/// Sum of weighted primitive vectors of the edges crossed by the simple
/// closed polygon `loop`, each oriented from inside to outside. Throws
/// PreconditionError when the loop passes through a curve vertex, runs along
/// an edge, or meets an edge at one of its own corners.
IntVector global_balance_sum(const TropicalCurve& curve, const std::vector<RationalPoint>& loop);

/// Sum of moments about p0 of the same tangent vectors.
Rational moment_sum(const TropicalCurve& curve, const std::vector<RationalPoint>& loop, const RationalPoint& p0);

/// Exact point-in-polygon test; the point must not lie on the boundary.
bool inside_polygon(const std::vector<RationalPoint>& polygon, const RationalPoint& p);

/// Overlay of two curves: edges split at every crossing and at every vertex
/// of the other curve; collinear overlaps merged with weights added.
/// Vertices come out in lexicographic order.
TropicalCurve union_curves(const TropicalCurve& a, const TropicalCurve& b);

TropicalCurve translate(const TropicalCurve& curve, const RationalVector& t);

/// Point reflection x -> -x.
TropicalCurve negate(const TropicalCurve& curve);

/// Vertices sorted lexicographically, edges stored with from < to and
/// sorted, rays sorted. Two curves describe the same complex iff their
/// canonical forms are equal.
TropicalCurve canonical(const TropicalCurve& curve);

/// Fuses 2-valent vertices whose two branches are opposite with equal
/// weight. Explicit; no other operation normalizes implicitly.
TropicalCurve normalize(const TropicalCurve& curve);

/// Connectivity of the underlying graph (vertices joined by finite edges).
bool is_connected(const TropicalCurve& curve);

bool is_reduced(const TropicalCurve& curve);

}  // namespace tropjac
