#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "tropjac/error.hpp"
#include "tropjac/newton.hpp"
#include "tropjac/poly.hpp"

using namespace tropjac;
using fx::pt;

TEST(Newton, TriangleFaces) {
  const auto c = fx::load("triangle.json");
  const FaceStructure faces(c);
  EXPECT_EQ(faces.face_count(), 4U);
  EXPECT_EQ(faces.bounded_face_count(), 1U);
  EXPECT_EQ(faces.dart_count(), 2 * (c.edges.size() + c.rays.size()));
  for (std::size_t d = 0; d < faces.dart_count(); ++d) EXPECT_EQ(FaceStructure::twin(FaceStructure::twin(d)), d);
}

TEST(Newton, EulerCharacteristic) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 40; ++k) {
    const auto c = corner_locus(fx::random_full_polynomial(rng, static_cast<int>(fx::uniform(rng, 1, 4))));
    const FaceStructure faces(c);
    // Connected plane graph closed up at infinity.
    const auto v = static_cast<std::int64_t>(c.vertices.size());
    const auto e = static_cast<std::int64_t>(c.edges.size());
    const auto r = static_cast<std::int64_t>(c.rays.size());
    EXPECT_EQ(static_cast<std::int64_t>(faces.face_count()), e + r - v + 1);
    EXPECT_EQ(static_cast<std::int64_t>(faces.bounded_face_count()), e - v + 1);
  }
}

TEST(Newton, TriangleComplex) {
  const auto complex = newton_complex(fx::load("triangle.json"));
  const std::set<IntVector> expected = {{0, 0}, {1, 0}, {1, -1}, {2, 1}};
  EXPECT_EQ(complex.point_set(), expected);
  EXPECT_EQ(complex.segment_set().size(), 6U);
  const auto polygon = newton_polygon(fx::load("triangle.json"));
  EXPECT_EQ(polygon.vertices(), (std::vector<IntVector>{{0, 0}, {1, -1}, {2, 1}}));
  EXPECT_EQ(polygon.area(), Rational(3, 2));
}

TEST(Newton, LineComplexIsStandardSimplex) {
  const auto polygon = newton_polygon(fx::line(pt(3, -2)));
  EXPECT_EQ(polygon.vertices(), (std::vector<IntVector>{{0, 0}, {1, 0}, {0, 1}}));
}

TEST(Newton, DualEdgesAreOrthogonalWithWeightLength) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 30; ++k) {
    const auto c = corner_locus(fx::random_polynomial(rng, 4));
    const auto complex = newton_complex(c);
    const FaceStructure faces(c);
    for (const auto& e : complex.dual_edges) {
      const IntVector d = e.to - e.from;
      const auto& dir = e.crosses == Piece::Kind::edge ? edge_geometry(c, e.crosses_index).direction
                                                       : c.rays[e.crosses_index].direction;
      const auto w = e.crosses == Piece::Kind::edge ? c.edges[e.crosses_index].weight
                                                    : c.rays[e.crosses_index].weight;
      EXPECT_EQ(dot(d, dir.vec()), 0);
      EXPECT_EQ(primitive_decompose(d).lattice_length, w);
    }
  }
}

TEST(Newton, TraversalSeedsAgree) {
  const auto c = fx::load("cubic.json");
  const auto reference = newton_complex(c);
  for (std::uint64_t seed = 1; seed < 20; ++seed) EXPECT_EQ(newton_complex(c, seed), reference);
}

TEST(Newton, PolygonFromRaysAgrees) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 50; ++k) {
    const auto c = corner_locus(fx::random_polynomial(rng, 4));
    EXPECT_EQ(newton_polygon_from_rays(c), newton_polygon(c));
  }
  for (const auto& [name, c] : fx::corpus()) EXPECT_EQ(newton_polygon_from_rays(c), newton_polygon(c)) << name;
}

TEST(Newton, MultiplicitiesTileThePolygon) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 40; ++k) {
    const auto c = corner_locus(fx::random_polynomial(rng, 4));
    std::int64_t total = 0;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) total += vertex_multiplicity(c, v);
    EXPECT_EQ(total, newton_polygon(c).twice_area());
  }
  const auto fig8 = fx::load("figure_eight.json");
  EXPECT_EQ(vertex_multiplicity(fig8, 0), 2);
  EXPECT_EQ(multiplicity_at(fig8, pt(7, 7)), 0);
}

TEST(Newton, DualCellFromStarMatches) {
  const auto c = fx::load("cubic.json");
  const auto stars = star_table(c);
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    EXPECT_EQ(dual_cell(c, v).polygon.normalized(), dual_cell_from_star(stars[v]).normalized());
    EXPECT_EQ(vertex_multiplicity(c, v), 1);
  }
  EXPECT_THROW(dual_cell(c, 99), InputError);
}

TEST(Newton, HullAndArea) {
  const auto p = LatticePolygon::hull({{2, 2}, {0, 0}, {2, 0}, {1, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(p.vertices(), (std::vector<IntVector>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  EXPECT_EQ(p.twice_area(), 8);
  const auto seg = LatticePolygon::hull({{3, 1}, {1, 0}, {5, 2}});
  EXPECT_EQ(seg.vertices().size(), 2U);
  EXPECT_EQ(seg.twice_area(), 0);
  EXPECT_EQ(LatticePolygon().vertices(), (std::vector<IntVector>{{0, 0}}));
}

TEST(Newton, MinkowskiSumMatchesPairwiseHull) {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 200; ++k) {
    std::vector<IntVector> a;
    std::vector<IntVector> b;
    for (int i = 0, n = static_cast<int>(fx::uniform(rng, 1, 6)); i < n; ++i) {
      a.push_back({fx::uniform(rng, -4, 4), fx::uniform(rng, -4, 4)});
    }
    for (int i = 0, n = static_cast<int>(fx::uniform(rng, 1, 6)); i < n; ++i) {
      b.push_back({fx::uniform(rng, -4, 4), fx::uniform(rng, -4, 4)});
    }
    const auto p = LatticePolygon::hull(a);
    const auto q = LatticePolygon::hull(b);
    std::vector<IntVector> sums;
    for (auto u : a) {
      for (auto v : b) sums.push_back(u + v);
    }
    EXPECT_EQ(minkowski_sum(p, q), LatticePolygon::hull(sums));
    EXPECT_EQ(minkowski_sum(p, q).twice_area(), fx::twice_area_oracle(fx::hull_oracle(sums)));
  }
}

TEST(Newton, StarCurveRealizesPolygon) {
  const auto p = LatticePolygon::hull({{0, 0}, {3, 0}, {1, 2}, {0, 1}});
  const auto c = star_curve(p, pt(1, 1));
  EXPECT_TRUE(validate(c).valid());
  EXPECT_EQ(newton_polygon(c), p.normalized());
}
