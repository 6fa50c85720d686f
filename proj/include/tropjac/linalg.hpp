#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropjac/rational.hpp"

namespace tropjac {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, one vector per free column, each scaled to
/// coprime integers.
std::vector<std::vector<std::int64_t>> integer_null_space(const RationalMatrix& m, std::size_t cols);

}  // namespace tropjac
