#pragma once

// Data-parallel kernels. Each kernel has a serial reference implementation
// and an OpenMP implementation that must produce identical output (same
// elements, same order); the unit tests and the benchmark compare the two.

#include <cstddef>
#include <utility>
#include <vector>

#include "tropjac/curve.hpp"
#include "tropjac/intersection.hpp"
#include "tropjac/poly.hpp"

namespace tropjac::kernels {

struct Crossing {
  std::size_t first = 0;   ///< index into the first piece list
  std::size_t second = 0;  ///< index into the second piece list
  Rational s;              ///< parameter on the first piece
  Rational t;              ///< parameter on the second piece

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// All transversal meetings (endpoints included) between pieces of two
/// lists, ordered by (first, second).
std::vector<Crossing> crossings_serial(const std::vector<Piece>& a, const std::vector<Piece>& b);
std::vector<Crossing> crossings_parallel(const std::vector<Piece>& a, const std::vector<Piece>& b);

/// Dispatches to the parallel kernel above a work threshold.
std::vector<Crossing> crossings(const std::vector<Piece>& a, const std::vector<Piece>& b);

using CurvePair = std::pair<TropicalCurve, TropicalCurve>;

std::vector<Divisor> stable_intersections_serial(const std::vector<CurvePair>& pairs);
std::vector<Divisor> stable_intersections_parallel(const std::vector<CurvePair>& pairs);

std::vector<TropicalCurve> corner_loci_serial(const std::vector<TropicalPolynomial>& polys);
std::vector<TropicalCurve> corner_loci_parallel(const std::vector<TropicalPolynomial>& polys);

/// Sets the work size above which `crossings` goes parallel. Returns the
/// previous value.
std::size_t set_parallel_threshold(std::size_t pairs);

}  // namespace tropjac::kernels
