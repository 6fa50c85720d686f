#include "tropjac/intersection.hpp"

#include <cstdio>
#include <cstdlib>
#include <set>

#include "tropjac/error.hpp"
#include "tropjac/pieces.hpp"

namespace tropjac {

Divisor Divisor::point(const RationalPoint& p, std::int64_t multiplicity) {
  Divisor d;
  d.add(p, multiplicity);
  return d;
}

void Divisor::add(const RationalPoint& p, std::int64_t multiplicity) {
  if (multiplicity == 0) return;
  auto [it, fresh] = terms_.emplace(p, multiplicity);
  if (!fresh) {
    it->second += multiplicity;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Divisor::degree() const {
  std::int64_t sum = 0;
  for (const auto& [p, m] : terms_) sum += m;
  return sum;
}

Divisor Divisor::with_host(std::string tag) const {
  Divisor d = *this;
  d.host_ = std::move(tag);
  return d;
}

void Divisor::check_host(const Divisor& other) const {
  if (!host_.empty() && !other.host_.empty() && host_ != other.host_) {
    throw PreconditionError("divisors live on different host curves");
  }
}

Divisor& Divisor::operator+=(const Divisor& other) {
  check_host(other);
  if (host_.empty()) host_ = other.host_;
  for (const auto& [p, m] : other.terms_) add(p, m);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& other) {
  check_host(other);
  if (host_.empty()) host_ = other.host_;
  for (const auto& [p, m] : other.terms_) add(p, -m);
  return *this;
}

Divisor Divisor::operator-() const {
  Divisor d;
  d.host_ = host_;
  for (const auto& [p, m] : terms_) d.terms_.emplace(p, -m);
  return d;
}

std::string to_string(const Divisor& d) {
  if (d.empty()) return "0";
  std::string out;
  for (const auto& [p, m] : d.terms()) {
    if (!out.empty()) out += m < 0 ? " - " : " + ";
    else if (m < 0) out += "-";
    const auto a = std::llabs(m);
    if (a != 1) out += std::to_string(a) + "*";
    out += to_string(p);
  }
  return out;
}

std::string host_tag(const TropicalCurve& curve) {
  const auto c = canonical(curve);
  std::string text;
  for (const auto& v : c.vertices) text += to_string(v) + ";";
  for (const auto& e : c.edges) text += std::to_string(e.from) + "-" + std::to_string(e.to) + ":" + std::to_string(e.weight) + ";";
  for (const auto& r : c.rays) text += std::to_string(r.vertex) + to_string(r.direction.vec()) + ":" + std::to_string(r.weight) + ";";
  // FNV-1a, 64 bit.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::int64_t transversal_multiplicity(IntVector weighted_e, IntVector weighted_f) {
  const auto c = cross(weighted_e, weighted_f);
  if (c == 0) throw PreconditionError("parallel edges have no transversal multiplicity");
  return std::llabs(c);
}

namespace {

bool at_end(const Piece& p, const Rational& s) { return s.is_zero() || (p.length && s == *p.length); }

std::string piece_name(const char* curve, const Piece& p) {
  return std::string(curve) + (p.kind == Piece::Kind::edge ? " edge " : " ray ") + std::to_string(p.index);
}

std::string pair_name(const Piece& p, const Piece& q) {
  return piece_name("c1", p) + " and " + piece_name("c2", q);
}

}  // namespace

std::int64_t transversal_multiplicity(const Piece& e, const Piece& f) {
  const auto hit = piece_crossing(e, f);
  if (!hit || at_end(e, hit->s) || at_end(f, hit->t)) {
    throw PreconditionError("pieces do not cross in a point interior to both");
  }
  return transversal_multiplicity(e.weight * e.direction.vec(), f.weight * f.direction.vec());
}

bool shares_segment(const TropicalCurve& c1, const TropicalCurve& c2) {
  const auto pa = pieces(c1);
  const auto pb = pieces(c2);
  for (const auto& p : pa) {
    for (const auto& q : pb) {
      const auto contact = collinear_contact(p, q);
      if (contact && contact->positive_length()) return true;
    }
  }
  return false;
}

bool is_transversal(const TropicalCurve& c1, const TropicalCurve& c2) {
  const auto pa = pieces(c1);
  const auto pb = pieces(c2);
  for (const auto& p : pa) {
    for (const auto& q : pb) {
      if (collinear_contact(p, q)) return false;
      const auto hit = piece_crossing(p, q);
      if (hit && (at_end(p, hit->s) || at_end(q, hit->t))) return false;
    }
  }
  for (const auto& v : c1.vertices) {
    if (locate(c2, v).on_curve()) return false;
  }
  return true;
}

IntVector generic_direction(const TropicalCurve& c1, const TropicalCurve& c2) {
  std::set<std::pair<std::int64_t, std::int64_t>> slopes;
  for (const auto* c : {&c1, &c2}) {
    for (const auto& p : pieces(*c)) slopes.insert({p.direction.x(), p.direction.y()});
  }
  for (std::int64_t k = 0;; ++k) {
    const IntVector v{1, k};
    bool parallel = false;
    for (const auto& [x, y] : slopes) parallel = parallel || cross(v, IntVector{x, y}) == 0;
    if (!parallel) return v;
  }
}

Divisor stable_intersection(const TropicalCurve& c1, const TropicalCurve& c2) {
  if (shares_segment(c1, c2)) {
    return perturbation_oracle(c1, c2, RationalVector(generic_direction(c1, c2)));
  }
  const auto overlay = union_curves(c1, c2);
  Divisor out;
  for (std::size_t v = 0; v < overlay.vertices.size(); ++v) {
    const auto& p = overlay.vertices[v];
    if (!locate(c1, p).on_curve() || !locate(c2, p).on_curve()) continue;
    const std::int64_t twice = vertex_multiplicity(overlay, v) - multiplicity_at(c1, p) - multiplicity_at(c2, p);
    if (twice % 2 != 0) throw InvariantViolation("odd multiplicity difference at " + to_string(p));
    out.add(p, twice / 2);
  }
  return out;
}

namespace {

// a + b*eps for infinitesimal eps > 0.
struct FirstOrder {
  Rational c;
  Rational slope;

  int sign() const { return c.sign() != 0 ? c.sign() : slope.sign(); }
};

FirstOrder operator-(const FirstOrder& a, const Rational& b) { return {a.c - b, a.slope}; }

}  // namespace

Divisor perturbation_oracle(const TropicalCurve& c1, const TropicalCurve& c2, const RationalVector& direction) {
  if (direction.is_zero()) throw PreconditionError("perturbation direction must be nonzero");
  const auto pa = pieces(c1);
  const auto pb = pieces(c2);
  Divisor out;
  for (const auto& p : pa) {
    const IntVector u = p.direction.vec();
    for (const auto& q : pb) {
      const IntVector w = q.direction.vec();
      const std::int64_t denom = cross(u, w);
      if (denom == 0) {
        if (cross(direction, u).is_zero() && collinear_contact(p, q)) {
          throw PreconditionError("direction " + to_string(direction) + " is not generic: " + pair_name(p, q) +
                                  " stay collinear and in contact");
        }
        continue;
      }
      const RationalVector d = q.origin - p.origin;
      const Rational den(denom);
      const FirstOrder s{cross(d, w) / den, cross(direction, w) / den};
      const FirstOrder t{cross(d, u) / den, cross(direction, u) / den};
      if (s.slope.is_zero() && at_end(p, s.c)) {
        throw PreconditionError("direction " + to_string(direction) + " is not generic: " + pair_name(p, q) +
                                " keep meeting at an endpoint of the first");
      }
      if (t.slope.is_zero() && at_end(q, t.c)) {
        throw PreconditionError("direction " + to_string(direction) + " is not generic: " + pair_name(p, q) +
                                " keep meeting at an endpoint of the second");
      }
      if (s.sign() < 0 || t.sign() < 0) continue;
      if (p.length && (s - *p.length).sign() > 0) continue;
      if (q.length && (t - *q.length).sign() > 0) continue;
      out.add(p.at(s.c), transversal_multiplicity(p.weight * u, q.weight * w));
    }
  }
  return out;
}

std::int64_t bezout_degree(const LatticePolygon& p, const LatticePolygon& q) {
  const std::int64_t twice = minkowski_sum(p, q).twice_area() - p.twice_area() - q.twice_area();
  if (twice % 2 != 0) throw InvariantViolation("odd mixed area");
  return twice / 2;
}

}  // namespace tropjac
