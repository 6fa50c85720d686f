#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "tropjac/rational.hpp"

namespace tropjac {

/// Integral planar vector. Lattice data of tropical curves (edge directions,
/// Newton-complex points) lives here.
struct IntVector {
  std::int64_t x = 0;
  std::int64_t y = 0;

  IntVector operator-() const { return {-x, -y}; }
  IntVector& operator+=(IntVector o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  IntVector& operator-=(IntVector o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend IntVector operator+(IntVector a, IntVector b) { return a += b; }
  friend IntVector operator-(IntVector a, IntVector b) { return a -= b; }
  friend IntVector operator*(std::int64_t k, IntVector v) { return {k * v.x, k * v.y}; }
  bool is_zero() const { return x == 0 && y == 0; }

  friend auto operator<=>(const IntVector&, const IntVector&) = default;
};

std::int64_t cross(IntVector u, IntVector v);
std::int64_t dot(IntVector u, IntVector v);
inline IntVector rotate_ccw(IntVector v) { return {-v.y, v.x}; }
inline IntVector rotate_cw(IntVector v) { return {v.y, -v.x}; }
std::string to_string(IntVector v);

/// Integral vector with coprime coordinates.
class PrimitiveVector {
 public:
  PrimitiveVector() = default;
  /// Throws InputError unless gcd(|x|, |y|) = 1.
  PrimitiveVector(std::int64_t x, std::int64_t y);
  explicit PrimitiveVector(IntVector v) : PrimitiveVector(v.x, v.y) {}

  static bool is_primitive(IntVector v);

  std::int64_t x() const { return v_.x; }
  std::int64_t y() const { return v_.y; }
  IntVector vec() const { return v_; }
  operator IntVector() const { return v_; }  // NOLINT(google-explicit-constructor)
  PrimitiveVector operator-() const { return PrimitiveVector(-v_.x, -v_.y); }

  friend auto operator<=>(const PrimitiveVector&, const PrimitiveVector&) = default;

 private:
  IntVector v_{1, 0};
};

struct LatticeDecomposition {
  PrimitiveVector direction;
  std::int64_t lattice_length = 0;
};

/// v = lattice_length * direction. Throws InputError for the zero vector.
LatticeDecomposition primitive_decompose(IntVector v);

struct RationalPoint {
  Rational x;
  Rational y;

  RationalPoint() = default;
  RationalPoint(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit RationalPoint(IntVector v) : x(v.x), y(v.y) {}

  RationalPoint& operator+=(const RationalPoint& o);
  RationalPoint& operator-=(const RationalPoint& o);
  friend RationalPoint operator+(RationalPoint a, const RationalPoint& b) { return a += b; }
  friend RationalPoint operator-(RationalPoint a, const RationalPoint& b) { return a -= b; }
  friend RationalPoint operator*(const Rational& k, const RationalPoint& p) { return {k * p.x, k * p.y}; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend std::strong_ordering operator<=>(const RationalPoint&, const RationalPoint&) = default;
};

/// Displacements share the representation of points.
using RationalVector = RationalPoint;

std::string to_string(const RationalPoint& p);

Rational cross(const RationalVector& u, const RationalVector& v);
Rational cross(const RationalVector& u, IntVector v);
Rational dot(const RationalVector& u, IntVector v);

/// Exterior product of (P - P0) with v: the moment of the tangent vector
/// (v, P) about the base point P0.
Rational moment(IntVector v, const RationalPoint& p, const RationalPoint& p0);

/// A nonzero rational displacement written as lattice_length * direction
/// with a primitive integral direction and a positive rational length.
struct RationalDecomposition {
  PrimitiveVector direction;
  Rational lattice_length;
};

/// Throws InputError for the zero vector.
RationalDecomposition rational_decompose(const RationalVector& d);

/// Exact counterclockwise-angle key for nonzero integral vectors: compares
/// by half-plane index, then by the sign of the cross product. Two keys are
/// equal iff the vectors are positive multiples of each other.
class PseudoAngle {
 public:
  explicit PseudoAngle(IntVector v);

  /// 0 for angles in [0, pi), 1 for [pi, 2 pi).
  int half() const { return half_; }
  IntVector vector() const { return v_; }

  friend bool operator==(const PseudoAngle& a, const PseudoAngle& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const PseudoAngle& a, const PseudoAngle& b);

 private:
  IntVector v_;
  int half_ = 0;
};

}  // namespace tropjac
