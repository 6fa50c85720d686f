// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "tropjac/kernels.hpp"
#include "tropjac/poly.hpp"

using namespace tropjac;

namespace {

TropicalPolynomial random_full(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  TropicalPolynomial f;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) f.terms[{i, j}] = Rational(num(rng), den(rng));
  }
  return f;
}

std::vector<Piece> piece_set(int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return pieces(corner_locus(random_full(rng, degree)));
}

std::vector<kernels::CurvePair> pair_set(std::size_t n) {
  std::mt19937_64 rng(7);
  std::vector<kernels::CurvePair> pairs;
  for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(corner_locus(random_full(rng, 3)), corner_locus(random_full(rng, 3)));
  return pairs;
}

std::vector<TropicalPolynomial> poly_set(std::size_t n) {
  std::mt19937_64 rng(11);
  std::vector<TropicalPolynomial> polys;
  for (std::size_t k = 0; k < n; ++k) polys.push_back(random_full(rng, 4));
  return polys;
}

void BM_CrossingsSerial(benchmark::State& state) {
  const auto a = piece_set(static_cast<int>(state.range(0)), 1);
  const auto b = piece_set(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crossings_serial(a, b));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
}

void BM_CrossingsParallel(benchmark::State& state) {
  const auto a = piece_set(static_cast<int>(state.range(0)), 1);
  const auto b = piece_set(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::crossings_parallel(a, b));
  state.counters["pairs"] = static_cast<double>(a.size() * b.size());
}

void BM_StableIntersectionsSerial(benchmark::State& state) {
  const auto pairs = pair_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::stable_intersections_serial(pairs));
}

void BM_StableIntersectionsParallel(benchmark::State& state) {
  const auto pairs = pair_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::stable_intersections_parallel(pairs));
}

void BM_CornerLociSerial(benchmark::State& state) {
  const auto polys = poly_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::corner_loci_serial(polys));
}

void BM_CornerLociParallel(benchmark::State& state) {
  const auto polys = poly_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::corner_loci_parallel(polys));
}

}  // namespace

BENCHMARK(BM_CrossingsSerial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CrossingsParallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_StableIntersectionsSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StableIntersectionsParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CornerLociSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CornerLociParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
