#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropjac/curve.hpp"
#include "tropjac/io.hpp"
#include "tropjac/newton.hpp"
#include "tropjac/poly.hpp"

#ifndef TROPJAC_TEST_DATA
#error "TROPJAC_TEST_DATA must point at tests/data"
#endif

namespace fx {

using namespace tropjac;

inline std::string data_path(const std::string& name) { return std::string(TROPJAC_TEST_DATA) + "/" + name; }

inline TropicalCurve load(const std::string& name) { return io::read_curve(data_path(name)); }

inline RationalPoint pt(std::int64_t x, std::int64_t y) { return {Rational(x), Rational(y)}; }

/// One vertex with rays of weight one.
inline TropicalCurve star(const RationalPoint& apex, const std::vector<IntVector>& dirs) {
  TropicalCurve c;
  c.vertices = {apex};
  for (auto d : dirs) c.rays.push_back({0, PrimitiveVector(d), 1});
  return c;
}

/// Max-plus tropical line with apex p: rays (-1,0), (0,-1), (1,1).
inline TropicalCurve line(const RationalPoint& p) { return star(p, {{-1, 0}, {0, -1}, {1, 1}}); }

/// Named curves of the fixture corpus.
inline std::vector<std::pair<std::string, TropicalCurve>> corpus() {
  std::vector<std::pair<std::string, TropicalCurve>> out;
  for (const char* name : {"line", "conic", "cubic", "triangle", "figure_eight", "tail", "theta", "nonreduced",
                           "mobile_l", "mobile_m"}) {
    out.emplace_back(name, load(std::string(name) + ".json"));
  }
  return out;
}

/// Reduced curves whose bunch is a bouquet.
inline std::vector<std::pair<std::string, TropicalCurve>> bouquet_corpus() {
  std::vector<std::pair<std::string, TropicalCurve>> out;
  for (const char* name : {"cubic", "triangle", "figure_eight", "tail"}) {
    out.emplace_back(name, load(std::string(name) + ".json"));
  }
  return out;
}

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// p/q with |p| <= num_bound and 1 <= q <= den_bound.
inline Rational random_rational(std::mt19937_64& rng, std::int64_t num_bound, std::int64_t den_bound) {
  return Rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline RationalPoint random_point(std::mt19937_64& rng, std::int64_t num_bound, std::int64_t den_bound) {
  return {random_rational(rng, num_bound, den_bound), random_rational(rng, num_bound, den_bound)};
}

/// Random support inside the degree-d triangle with at least two exponents,
/// random rational coefficients.
inline TropicalPolynomial random_polynomial(std::mt19937_64& rng, int max_degree,
                                            Semiring semiring = Semiring::max_plus) {
  const int d = static_cast<int>(uniform(rng, 1, max_degree));
  TropicalPolynomial f;
  f.semiring = semiring;
  while (f.terms.size() < 2) {
    f.terms.clear();
    for (int i = 0; i <= d; ++i) {
      for (int j = 0; i + j <= d; ++j) {
        if (uniform(rng, 0, 3) > 0) f.terms[{i, j}] = random_rational(rng, 12, 4);
      }
    }
  }
  return f;
}

/// Random polynomial with the full degree-d triangle as support.
inline TropicalPolynomial random_full_polynomial(std::mt19937_64& rng, int d) {
  TropicalPolynomial f;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) f.terms[{i, j}] = random_rational(rng, 12, 4);
  }
  return f;
}

// Independent lattice-polygon oracles: Andrew's monotone chain and the
// shoelace formula, kept separate from the library's hull.

inline std::vector<IntVector> hull_oracle(std::vector<IntVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<IntVector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline std::int64_t twice_area_oracle(const std::vector<IntVector>& poly) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
  return s < 0 ? -s : s;
}

/// Mixed area from the hull of all pairwise vertex sums.
inline std::int64_t mixed_area_oracle(const std::vector<IntVector>& p, const std::vector<IntVector>& q) {
  std::vector<IntVector> sums;
  for (auto a : p) {
    for (auto b : q) sums.push_back(a + b);
  }
  const auto twice = twice_area_oracle(hull_oracle(sums)) - twice_area_oracle(hull_oracle(p)) -
                     twice_area_oracle(hull_oracle(q));
  return twice / 2;
}

/// Sum of weighted primitive vectors leaving each vertex, recomputed from
/// the raw edge and ray lists.
inline std::vector<IntVector> residuals_oracle(const TropicalCurve& c) {
  std::vector<IntVector> r(c.vertices.size());
  for (std::size_t e = 0; e < c.edges.size(); ++e) {
    const auto g = edge_geometry(c, e);
    r[c.edges[e].from] += c.edges[e].weight * g.direction.vec();
    r[c.edges[e].to] -= c.edges[e].weight * g.direction.vec();
  }
  for (const auto& ray : c.rays) r[ray.vertex] += ray.weight * ray.direction.vec();
  return r;
}

}  // namespace fx
