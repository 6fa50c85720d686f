#include "tropjac/kernels.hpp"

#include <atomic>
#include <exception>

#include "tropjac/pieces.hpp"

namespace tropjac::kernels {

namespace {

std::atomic<std::size_t> parallel_threshold{4096};

void crossings_row(const Piece& p, std::size_t i, const std::vector<Piece>& b, std::vector<Crossing>& out) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (const auto hit = piece_crossing(p, b[j])) out.push_back({i, j, hit->s, hit->t});
  }
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

template <typename In, typename Out, typename Fn>
std::vector<Out> map_parallel(const std::vector<In>& in, Fn fn) {
  const auto n = static_cast<std::ptrdiff_t>(in.size());
  std::vector<Out> out(in.size());
  std::vector<std::exception_ptr> errors(in.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      out[k] = fn(in[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  rethrow_first(errors);
  return out;
}

}  // namespace

std::vector<Crossing> crossings_serial(const std::vector<Piece>& a, const std::vector<Piece>& b) {
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < a.size(); ++i) crossings_row(a[i], i, b, out);
  return out;
}

std::vector<Crossing> crossings_parallel(const std::vector<Piece>& a, const std::vector<Piece>& b) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  std::vector<std::vector<Crossing>> rows(a.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) crossings_row(a[i], static_cast<std::size_t>(i), b, rows[i]);
  std::vector<Crossing> out;
  for (auto& row : rows) out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
  return out;
}

std::vector<Crossing> crossings(const std::vector<Piece>& a, const std::vector<Piece>& b) {
  if (a.size() * b.size() >= parallel_threshold.load()) return crossings_parallel(a, b);
  return crossings_serial(a, b);
}

std::vector<Divisor> stable_intersections_serial(const std::vector<CurvePair>& pairs) {
  std::vector<Divisor> out;
  out.reserve(pairs.size());
  for (const auto& [c1, c2] : pairs) out.push_back(stable_intersection(c1, c2));
  return out;
}

std::vector<Divisor> stable_intersections_parallel(const std::vector<CurvePair>& pairs) {
  return map_parallel<CurvePair, Divisor>(pairs, [](const CurvePair& p) { return stable_intersection(p.first, p.second); });
}

std::vector<TropicalCurve> corner_loci_serial(const std::vector<TropicalPolynomial>& polys) {
  std::vector<TropicalCurve> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(corner_locus(f));
  return out;
}

std::vector<TropicalCurve> corner_loci_parallel(const std::vector<TropicalPolynomial>& polys) {
  return map_parallel<TropicalPolynomial, TropicalCurve>(polys, [](const TropicalPolynomial& f) { return corner_locus(f); });
}

std::size_t set_parallel_threshold(std::size_t pairs) { return parallel_threshold.exchange(pairs); }

}  // namespace tropjac::kernels
