#include "tropjac/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <tuple>

#include "tropjac/error.hpp"

namespace tropjac {

std::vector<IntVector> TropicalPolynomial::support() const {
  std::vector<IntVector> out;
  for (const auto& [e, c] : terms) out.push_back(e);
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Semiring semiring) : text_(text) { result_.semiring = semiring; }

  TropicalPolynomial run() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    term();
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
      term();
    }
    return std::move(result_);
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_minus() const {
    return (pos_ < text_.size() && text_[pos_] == '-') || text_.substr(pos_, 3) == "\xE2\x88\x92";
  }

  void term() {
    Rational coefficient(0);
    IntVector exponent;
    factor(coefficient, exponent);
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        factor(coefficient, exponent);
      } else {
        break;
      }
    }
    auto [it, fresh] = result_.terms.emplace(exponent, coefficient);
    if (!fresh) {
      it->second = result_.semiring == Semiring::max_plus ? max(it->second, coefficient) : min(it->second, coefficient);
    }
  }

  void factor(Rational& coefficient, IntVector& exponent) {
    skip_space();
    if (pos_ == text_.size()) fail("expected a factor");
    const char ch = text_[pos_];
    if (ch == 'x' || ch == 'y') {
      ++pos_;
      std::int64_t power = 1;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        skip_space();
        if (at_minus()) fail("negative exponent");
        power = digits_value();
      }
      (ch == 'x' ? exponent.x : exponent.y) += power;
      return;
    }
    if (ch == '(') {
      ++pos_;
      skip_space();
      coefficient += number();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return;
    }
    coefficient += number();
  }

  std::int64_t digits_value() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    if (pos_ - start > 9) fail("exponent too large");
    return std::stoll(std::string(text_.substr(start, pos_ - start)));
  }

  Rational number() {
    std::string literal;
    if (at_minus()) {
      literal += '-';
      pos_ += text_[pos_] == '-' ? 1 : 3;
      skip_space();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number, 'x' or 'y'");
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
      ++pos_;
      const std::size_t tail = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (tail == pos_) fail("expected digits");
    }
    literal += text_.substr(start, pos_ - start);
    try {
      return Rational::parse(literal);
    } catch (const InputError& e) {
      fail(e.what());
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  TropicalPolynomial result_;
};

// Coefficients seen through the max-plus lens: min-plus data is negated.
std::vector<std::pair<IntVector, Rational>> lifted(const TropicalPolynomial& f) {
  std::vector<std::pair<IntVector, Rational>> out;
  for (const auto& [e, c] : f.terms) out.emplace_back(e, f.semiring == Semiring::max_plus ? c : -c);
  return out;
}

bool collinear(const std::vector<std::pair<IntVector, Rational>>& pts) {
  for (std::size_t k = 2; k < pts.size(); ++k) {
    if (cross(pts[1].first - pts[0].first, pts[k].first - pts[0].first) != 0) return false;
  }
  return true;
}

struct Segment1D {
  IntVector a;
  IntVector b;
  Rational ca;
  Rational cb;
};

// Upper chain of the lifted points of a collinear support, as consecutive
// pairs ordered along the line.
std::vector<Segment1D> upper_chain(std::vector<std::pair<IntVector, Rational>> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  const IntVector along = pts.back().first - pts.front().first;
  const auto step = primitive_decompose(along).direction.vec();
  const auto coord = [&](const IntVector& p) { return dot(p - pts.front().first, step); };
  std::vector<std::size_t> chain;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    while (chain.size() >= 2) {
      const auto& o = pts[chain[chain.size() - 2]];
      const auto& a = pts[chain.back()];
      const auto& b = pts[k];
      // Keep a only if it lies strictly above the chord o-b.
      const Rational turn = Rational(coord(a.first) - coord(o.first)) * (b.second - o.second) -
                            Rational(coord(b.first) - coord(o.first)) * (a.second - o.second);
      if (turn.sign() >= 0) chain.pop_back();
      else break;
    }
    chain.push_back(k);
  }
  std::vector<Segment1D> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    const auto& a = pts[chain[k]];
    const auto& b = pts[chain[k + 1]];
    out.push_back({a.first, b.first, a.second, b.second});
  }
  return out;
}

}  // namespace

TropicalPolynomial parse_polynomial(std::string_view text, Semiring semiring) {
  return Parser(text, semiring).run();
}

std::string to_string(const TropicalPolynomial& f) {
  std::string out;
  for (const auto& [e, c] : f.terms) {
    if (!out.empty()) out += " + ";
    std::string term = c.sign() < 0 ? "(" + c.str() + ")" : c.str();
    if (e.x > 0) term += e.x == 1 ? "*x" : "*x^" + std::to_string(e.x);
    if (e.y > 0) term += e.y == 1 ? "*y" : "*y^" + std::to_string(e.y);
    out += term;
  }
  return out;
}

Rational evaluate(const TropicalPolynomial& f, const RationalPoint& p) {
  if (f.terms.empty()) throw InputError("evaluating a polynomial with no terms");
  std::optional<Rational> best;
  for (const auto& [e, c] : f.terms) {
    Rational value = Rational(e.x) * p.x + Rational(e.y) * p.y + c;
    if (!best) best = value;
    else best = f.semiring == Semiring::max_plus ? max(*best, value) : min(*best, value);
  }
  return *best;
}

std::set<IntVector> DualSubdivision::point_set() const {
  std::set<IntVector> out;
  for (const auto& cell : cells) out.insert(cell.polygon.vertices().begin(), cell.polygon.vertices().end());
  return out;
}

std::set<std::pair<IntVector, IntVector>> DualSubdivision::segment_set() const {
  std::set<std::pair<IntVector, IntVector>> out;
  for (const auto& cell : cells) {
    const auto& v = cell.polygon.vertices();
    if (v.size() == 2) {
      out.insert({v[0], v[1]});
      continue;
    }
    for (std::size_t k = 0; k < v.size(); ++k) {
      const auto& a = v[k];
      const auto& b = v[(k + 1) % v.size()];
      out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    }
  }
  return out;
}

DualSubdivision dual_subdivision(const TropicalPolynomial& f) {
  const auto pts = lifted(f);
  if (pts.empty()) throw InputError("polynomial has no terms");
  DualSubdivision out;
  out.hull = LatticePolygon::hull(f.support());
  if (pts.size() < 3 || collinear(pts)) {
    if (pts.size() == 1) return out;
    for (const auto& s : upper_chain(pts)) out.cells.push_back({LatticePolygon::hull({s.a, s.b}), {}, {}, {}});
    return out;
  }

  std::set<std::tuple<Rational, Rational, Rational>> planes;
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        const IntVector u = pts[b].first - pts[a].first;
        const IntVector v = pts[c].first - pts[a].first;
        const std::int64_t det = cross(u, v);
        if (det == 0) continue;
        const Rational du = pts[b].second - pts[a].second;
        const Rational dv = pts[c].second - pts[a].second;
        const Rational alpha = (du * Rational(v.y) - dv * Rational(u.y)) / Rational(det);
        const Rational beta = (Rational(u.x) * dv - Rational(v.x) * du) / Rational(det);
        const Rational gamma = pts[a].second - alpha * Rational(pts[a].first.x) - beta * Rational(pts[a].first.y);
        bool upper = true;
        for (const auto& [e, h] : pts) {
          if (h > alpha * Rational(e.x) + beta * Rational(e.y) + gamma) {
            upper = false;
            break;
          }
        }
        if (upper) planes.emplace(alpha, beta, gamma);
      }
    }
  }
  for (const auto& [alpha, beta, gamma] : planes) {
    std::vector<IntVector> on;
    for (const auto& [e, h] : pts) {
      if (h == alpha * Rational(e.x) + beta * Rational(e.y) + gamma) on.push_back(e);
    }
    out.cells.push_back({LatticePolygon::hull(on), alpha, beta, gamma});
  }
  return out;
}

namespace {

TropicalCurve corner_locus_max(const TropicalPolynomial& f) {
  if (f.terms.size() < 2) throw InputError("corner locus of a single-term polynomial is empty");
  const auto sub = dual_subdivision(f);
  TropicalCurve curve;

  if (sub.cells.front().polygon.vertices().size() == 2) {
    for (const auto& s : upper_chain(lifted(f))) {
      const IntVector d = s.b - s.a;
      const auto split = primitive_decompose(d);
      const Rational scale = (s.ca - s.cb) / Rational(dot(d, d));
      const std::size_t v = curve.vertices.size();
      curve.vertices.push_back(scale * RationalPoint(d));
      const PrimitiveVector normal(rotate_cw(split.direction.vec()));
      curve.rays.push_back({v, normal, split.lattice_length});
      curve.rays.push_back({v, -normal, split.lattice_length});
    }
    return curve;
  }

  struct Side {
    std::size_t cell;
    IntVector from;
    IntVector to;
  };
  std::map<std::pair<IntVector, IntVector>, std::vector<Side>> sides;
  for (std::size_t k = 0; k < sub.cells.size(); ++k) {
    const auto& cell = sub.cells[k];
    curve.vertices.push_back({-cell.alpha, -cell.beta});
    const auto& v = cell.polygon.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const auto& a = v[i];
      const auto& b = v[(i + 1) % v.size()];
      sides[a < b ? std::pair{a, b} : std::pair{b, a}].push_back({k, a, b});
    }
  }
  for (const auto& [key, list] : sides) {
    const auto split = primitive_decompose(list.front().to - list.front().from);
    if (list.size() == 2) {
      curve.edges.push_back({list[0].cell, list[1].cell, split.lattice_length});
    } else if (list.size() == 1) {
      curve.rays.push_back({list[0].cell, PrimitiveVector(rotate_cw(split.direction.vec())), split.lattice_length});
    } else {
      throw InvariantViolation("subdivision edge shared by more than two cells");
    }
  }
  return curve;
}

}  // namespace

TropicalCurve corner_locus(const TropicalPolynomial& f) {
  if (f.semiring == Semiring::max_plus) return corner_locus_max(f);
  TropicalPolynomial g;
  for (const auto& [e, c] : f.terms) g.terms.emplace(e, -c);
  return negate(corner_locus_max(g));
}

}  // namespace tropjac
