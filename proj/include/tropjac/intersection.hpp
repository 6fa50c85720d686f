#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tropjac/curve.hpp"
#include "tropjac/newton.hpp"

namespace tropjac {

/// Finite formal sum of points with integer multiplicities. Zero terms are
/// dropped on every update. An optional host tag records which curve the
/// points live on; arithmetic between divisors with different tags throws
/// PreconditionError.
class Divisor {
 public:
  Divisor() = default;

  static Divisor point(const RationalPoint& p, std::int64_t multiplicity = 1);

  void add(const RationalPoint& p, std::int64_t multiplicity);
  const std::map<RationalPoint, std::int64_t>& terms() const { return terms_; }
  std::int64_t degree() const;
  bool empty() const { return terms_.empty(); }

  const std::string& host() const { return host_; }
  Divisor with_host(std::string tag) const;

  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  Divisor operator-() const;

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.terms_ == b.terms_; }

 private:
  void check_host(const Divisor& other) const;

  std::map<RationalPoint, std::int64_t> terms_;
  std::string host_;
};

std::string to_string(const Divisor& d);

/// Stable tag identifying a curve up to relabeling, for Divisor::with_host.
std::string host_tag(const TropicalCurve& curve);

/// |u x v| for weighted primitive vectors u, v.
std::int64_t transversal_multiplicity(IntVector weighted_e, IntVector weighted_f);

/// Same, for two pieces that must cross in a single point interior to both.
/// Throws PreconditionError for parallel or non-crossing pieces.
std::int64_t transversal_multiplicity(const Piece& e, const Piece& f);

/// True when the curves meet only in finitely many points, each interior to
/// an edge or ray of both curves.
bool is_transversal(const TropicalCurve& c1, const TropicalCurve& c2);

/// True when some edge or ray of c1 shares a segment of positive length with
/// one of c2.
bool shares_segment(const TropicalCurve& c1, const TropicalCurve& c2);

/// Stable intersection C1.C2. Finite intersections use
/// mu_V = (Mult(V; C1 u C2) - Mult(V; C1) - Mult(V; C2)) / 2 on the overlay;
/// shared segments go through perturbation_oracle along generic_direction.
Divisor stable_intersection(const TropicalCurve& c1, const TropicalCurve& c2);

/// Limit as eps -> 0+ of the transversal intersection of c1 with
/// translate(c2, eps * direction). Crossing parameters are affine in eps and
/// are carried as exact (constant, slope) pairs. Throws PreconditionError,
/// naming the offending pair, when the direction is not generic.
Divisor perturbation_oracle(const TropicalCurve& c1, const TropicalCurve& c2, const RationalVector& direction);

/// First (1, k), k = 0, 1, 2, ..., parallel to no edge or ray of either
/// curve.
IntVector generic_direction(const TropicalCurve& c1, const TropicalCurve& c2);

/// Mixed area: area(P + Q) - area(P) - area(Q).
std::int64_t bezout_degree(const LatticePolygon& p, const LatticePolygon& q);

}  // namespace tropjac
