#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropjac/curve.hpp"
#include "tropjac/newton.hpp"

namespace tropjac {

enum class Semiring { max_plus, min_plus };

/// Exponent -> coefficient; an absent exponent is the additive identity.
struct TropicalPolynomial {
  std::map<IntVector, Rational> terms;
  Semiring semiring = Semiring::max_plus;

  std::vector<IntVector> support() const;

  friend bool operator==(const TropicalPolynomial&, const TropicalPolynomial&) = default;
};

/// Grammar:
///   poly   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := number | '(' number ')' | ('x' | 'y') ('^' digits)?
///   number := ['-'] digits ['/' digits | '.' digits]
/// A term multiplies tropically: coefficients and exponents add. Repeated
/// exponents merge by tropical sum (max, or min under min-plus). The
/// Unicode minus sign is accepted. Throws InputError with the character
/// offset on bad input.
TropicalPolynomial parse_polynomial(std::string_view text, Semiring semiring = Semiring::max_plus);

std::string to_string(const TropicalPolynomial& f);

Rational evaluate(const TropicalPolynomial& f, const RationalPoint& p);

/// A cell of the regular subdivision together with the plane
/// c = alpha*i + beta*j + gamma through its lifted points.
struct SubdivisionCell {
  LatticePolygon polygon;
  Rational alpha;
  Rational beta;
  Rational gamma;
};

/// Regular subdivision of Conv(support) induced by the upper hull of the
/// lifted points (i, j, c) (lower hull under min-plus). For a collinear
/// support the cells are segments.
struct DualSubdivision {
  LatticePolygon hull;
  std::vector<SubdivisionCell> cells;

  std::set<IntVector> point_set() const;
  std::set<std::pair<IntVector, IntVector>> segment_set() const;
};

DualSubdivision dual_subdivision(const TropicalPolynomial& f);

/// The tropical curve where the optimum is attained at least twice.
/// Throws InputError for a single-term polynomial.
TropicalCurve corner_locus(const TropicalPolynomial& f);

}  // namespace tropjac
