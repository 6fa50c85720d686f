#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tropjac/bunch.hpp"
#include "tropjac/curve.hpp"
#include "tropjac/intersection.hpp"

namespace tropjac {

/// Per-cycle overrides of the canonical parametrization. `reverse[i]` runs
/// cycle i clockwise; `base_shift[i]` moves its zero forward by that much
/// lattice length. Missing entries mean no change.
struct ParametrizationOptions {
  std::vector<bool> reverse;
  std::vector<Rational> base_shift;
};

/// Lattice-length parametrization of one bouquet circle. The stored walk is
/// counterclockwise from O_i; `reversed` and `shift` describe the map
/// actually used for coordinates: lambda = (+-t - shift) mod length, with t
/// the counterclockwise parameter.
struct CycleParametrization {
  std::vector<std::size_t> vertices;       ///< vertices[0] = O_i
  std::vector<std::size_t> edges;          ///< edges[k] joins vertices[k], vertices[k+1]
  std::vector<RationalPoint> positions;    ///< coordinates of `vertices`
  std::vector<Rational> offsets;           ///< counterclockwise parameter of vertices[k]
  std::vector<PrimitiveVector> directions; ///< direction of step k
  Rational length;
  bool reversed = false;
  Rational shift;

  /// lambda from the counterclockwise parameter.
  Rational coordinate(const Rational& t) const;
  /// pi(lambda): the cycle point with coordinate lambda (any rational).
  RationalPoint point_at(const Rational& lambda) const;
};

struct CycleSystem {
  TropicalCurve curve;
  BunchGraph bunch;
  BouquetStructure bouquet;
  std::vector<CycleParametrization> cycles;
  /// For every bunch node off the center: the cycle it sits on and the
  /// vertex of that cycle inside it.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> attachment;

  std::size_t genus() const { return cycles.size(); }
  std::vector<Rational> lengths() const;
};

/// Throws UnsupportedHypotheses if the bunch is not a bouquet and
/// PreconditionError if the curve is disconnected.
CycleSystem parametrize_cycles(const TropicalCurve& curve, const ParametrizationOptions& options = {});

/// Image of a curve point in the bouquet: a cycle index and coordinate, or
/// the center (no cycle).
struct ProjectedPoint {
  std::optional<std::size_t> cycle;
  Rational coordinate;
};

/// Throws PreconditionError for a point off the curve.
ProjectedPoint project_point(const CycleSystem& system, const RationalPoint& p);

struct AbelCoordinate {
  std::vector<Rational> residues;  ///< residues[i] in [0, lengths[i])
  std::vector<Rational> lengths;
  std::int64_t degree = 0;

  friend bool operator==(const AbelCoordinate& a, const AbelCoordinate& b) {
    return a.residues == b.residues && a.degree == b.degree;
  }
};

std::string to_string(const AbelCoordinate& a);

AbelCoordinate abel_coordinate(const Divisor& d, const CycleSystem& system);

/// Decides D ~ D'. Requires a reduced curve whose bunch is a bouquet;
/// throws UnsupportedHypotheses otherwise.
bool linearly_equivalent(const Divisor& d1, const Divisor& d2, const TropicalCurve& curve,
                         const ParametrizationOptions& options = {});

/// Abel coordinate of the stable intersection C.L.
AbelCoordinate sigma(const CycleSystem& system, const TropicalCurve& mobile);

}  // namespace tropjac
