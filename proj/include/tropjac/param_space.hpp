#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tropjac/curve.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/newton.hpp"

namespace tropjac {

/// Everything about a curve except its edge lengths and position: the
/// graph, edge directions, weights, rays and the normalized Newton complex.
struct CombinatorialType {
  std::size_t vertex_count = 0;
  std::vector<FiniteEdge> edges;
  std::vector<PrimitiveVector> directions;  ///< of each edge, from -> to
  std::vector<Ray> rays;
  NewtonComplex complex;

  friend bool operator==(const CombinatorialType&, const CombinatorialType&) = default;
};

/// A point of the parameter cone: positive lattice lengths of the finite
/// edges and the position of one anchor vertex.
struct ParamPoint {
  CombinatorialType type;
  std::vector<Rational> lengths;
  std::size_t anchor_vertex = 0;
  RationalPoint anchor;

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;
};

/// Throws PreconditionError for a disconnected curve or a bad anchor index.
ParamPoint params_from_curve(const TropicalCurve& curve, std::size_t anchor_vertex = 0);

/// One closure constraint: the edges of a fundamental cycle with the sign
/// (+1 / -1) they are traversed with.
using ClosureCycle = std::vector<std::pair<std::size_t, int>>;

/// Fundamental cycles of a breadth-first spanning tree rooted at vertex 0.
std::vector<ClosureCycle> closure_cycles(const CombinatorialType& type);

/// Lays the vertices out from the anchor. Throws PreconditionError for a
/// non-positive length, a disconnected type, or a violated closure equation
/// (the message lists the cycle's edges).
TropicalCurve curve_from_params(const ParamPoint& p);

struct PerturbOptions {
  /// Scale of the length step; halved until every length stays positive.
  Rational length_scale = Rational(1, 2);
  /// Anchor moves by integer multiples of this in each coordinate.
  Rational anchor_scale = Rational(1, 4);
  /// Largest integer multiple used for either kind of step.
  std::int64_t max_multiple = 2;
  /// Optional box [lo, hi] the anchor is reflected back into.
  std::optional<std::pair<RationalPoint, RationalPoint>> anchor_box;
};

/// A nearby point of the same cone. Length steps are integer combinations
/// of an integer basis of the closure null space, so every closure equation
/// still holds exactly.
ParamPoint perturb(const ParamPoint& p, std::uint64_t seed, const PerturbOptions& options = {});

/// Same Newton polygon and candidate's Newton complex contained, as a point
/// set, in the reference's.
bool is_degeneration(const TropicalCurve& candidate, const TropicalCurve& reference);

/// Same Newton polygon.
bool same_component(const TropicalCurve& a, const TropicalCurve& b);

struct WalkRecord {
  std::size_t step = 0;
  ParamPoint params;
  AbelCoordinate sigma;
  bool transversal = true;
};

/// Chain of `steps` perturbations of the mobile curve, recording sigma at
/// the start and after every step. Step k uses a seed derived from `seed`
/// and k.
std::vector<WalkRecord> walk_sigma(const CycleSystem& host, const TropicalCurve& mobile, std::size_t steps,
                                   std::uint64_t seed, const PerturbOptions& options = {});

}  // namespace tropjac
