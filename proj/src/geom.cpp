#include "tropjac/geom.hpp"

#include <numeric>

#include "tropjac/error.hpp"

namespace tropjac {

std::int64_t cross(IntVector u, IntVector v) { return u.x * v.y - v.x * u.y; }

std::int64_t dot(IntVector u, IntVector v) { return u.x * v.x + u.y * v.y; }

std::string to_string(IntVector v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

bool PrimitiveVector::is_primitive(IntVector v) { return std::gcd(v.x, v.y) == 1; }

PrimitiveVector::PrimitiveVector(std::int64_t x, std::int64_t y) : v_{x, y} {
  if (!is_primitive(v_)) throw InputError("vector " + to_string(v_) + " is not primitive");
}

LatticeDecomposition primitive_decompose(IntVector v) {
  if (v.is_zero()) throw InputError("zero vector has no primitive direction");
  const std::int64_t g = std::gcd(v.x, v.y);
  return {PrimitiveVector(v.x / g, v.y / g), g};
}

RationalPoint& RationalPoint::operator+=(const RationalPoint& o) {
  x += o.x;
  y += o.y;
  return *this;
}

RationalPoint& RationalPoint::operator-=(const RationalPoint& o) {
  x -= o.x;
  y -= o.y;
  return *this;
}

std::string to_string(const RationalPoint& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

Rational cross(const RationalVector& u, const RationalVector& v) { return u.x * v.y - v.x * u.y; }

Rational cross(const RationalVector& u, IntVector v) { return u.x * Rational(v.y) - Rational(v.x) * u.y; }

Rational dot(const RationalVector& u, IntVector v) { return u.x * Rational(v.x) + u.y * Rational(v.y); }

Rational moment(IntVector v, const RationalPoint& p, const RationalPoint& p0) { return cross(p - p0, v); }

RationalDecomposition rational_decompose(const RationalVector& d) {
  if (d.is_zero()) throw InputError("zero displacement has no direction");
  // Clear denominators, then divide out the content.
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), d.x.denominator().get_mpz_t(), d.y.denominator().get_mpz_t());
  const mpz_class ix = d.x.numerator() * (l / d.x.denominator());
  const mpz_class iy = d.y.numerator() * (l / d.y.denominator());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), ix.get_mpz_t(), iy.get_mpz_t());
  const mpz_class px = ix / g;
  const mpz_class py = iy / g;
  if (!px.fits_slong_p() || !py.fits_slong_p()) throw InputError("edge slope too large for a machine integer");
  PrimitiveVector u(px.get_si(), py.get_si());
  Rational length = u.x() != 0 ? d.x / Rational(u.x()) : d.y / Rational(u.y());
  return {u, length};
}

PseudoAngle::PseudoAngle(IntVector v) : v_(v) {
  if (v.is_zero()) throw InvariantViolation("pseudo-angle of the zero vector");
  half_ = (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0;
}

std::strong_ordering operator<=>(const PseudoAngle& a, const PseudoAngle& b) {
  if (a.half_ != b.half_) return a.half_ <=> b.half_;
  const std::int64_t c = cross(a.v_, b.v_);
  if (c > 0) return std::strong_ordering::less;
  if (c < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace tropjac
