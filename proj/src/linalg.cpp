#include "tropjac/linalg.hpp"

#include <algorithm>

namespace tropjac {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational lead = m[row][col];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<std::int64_t>> integer_null_space(const RationalMatrix& m, std::size_t cols) {
  RationalMatrix work = m;
  const auto pivots = rref(work, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work[r][free];

    mpz_class scale = 1;
    for (const auto& x : v) scale = lcm(scale, x.denominator());
    mpz_class common = 0;
    for (const auto& x : v) common = gcd(common, x.numerator() * (scale / x.denominator()));
    std::vector<std::int64_t> out;
    for (const auto& x : v) {
      const Rational scaled = x * Rational(mpq_class(scale, common));
      out.push_back(scaled.to_int64());
    }
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace tropjac
