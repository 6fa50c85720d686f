#include <algorithm>
#include <map>
#include <set>

#include "tropjac/curve.hpp"
#include "tropjac/kernels.hpp"
#include "tropjac/pieces.hpp"

namespace tropjac {

TropicalCurve union_curves(const TropicalCurve& a, const TropicalCurve& b) {
  const auto pa = pieces(a);
  const auto pb = pieces(b);

  std::set<RationalPoint> points(a.vertices.begin(), a.vertices.end());
  points.insert(b.vertices.begin(), b.vertices.end());
  for (const auto& c : kernels::crossings(pa, pb)) points.insert(pa[c.first].at(c.s));

  std::map<std::pair<RationalPoint, RationalPoint>, std::int64_t> segment_weight;
  std::map<std::pair<RationalPoint, PrimitiveVector>, std::int64_t> ray_weight;

  const auto split = [&](const Piece& piece) {
    std::vector<Rational> cuts{Rational(0)};
    if (piece.length) cuts.push_back(*piece.length);
    for (const auto& p : points) {
      const auto s = piece.parameter_of(p);
      if (s && s->sign() > 0 && (!piece.length || *s < *piece.length)) cuts.push_back(*s);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      auto p = piece.at(cuts[k]);
      auto q = piece.at(cuts[k + 1]);
      if (q < p) std::swap(p, q);
      segment_weight[{p, q}] += piece.weight;
    }
    if (!piece.length) ray_weight[{piece.at(cuts.back()), piece.direction}] += piece.weight;
  };
  for (const auto& piece : pa) split(piece);
  for (const auto& piece : pb) split(piece);

  TropicalCurve out;
  std::map<RationalPoint, std::size_t> index;
  for (const auto& p : points) {
    index.emplace(p, out.vertices.size());
    out.vertices.push_back(p);
  }
  for (const auto& [ends, w] : segment_weight) out.edges.push_back({index.at(ends.first), index.at(ends.second), w});
  for (const auto& [start, w] : ray_weight) out.rays.push_back({index.at(start.first), start.second, w});
  return out;
}

}  // namespace tropjac
