#pragma once

#include <optional>

#include "tropjac/curve.hpp"

namespace tropjac {

/// Transversal meeting point of two non-parallel pieces, as parameters on
/// each. Endpoints count.
struct PieceCrossing {
  Rational s;
  Rational t;
};

std::optional<PieceCrossing> piece_crossing(const Piece& p, const Piece& q);

/// Shared part of two collinear pieces, in p's parameter. `hi` is absent
/// when the shared part is unbounded.
struct CollinearContact {
  Rational lo;
  std::optional<Rational> hi;

  bool positive_length() const { return !hi || lo < *hi; }
};

/// nullopt unless p and q lie on one line and meet.
std::optional<CollinearContact> collinear_contact(const Piece& p, const Piece& q);

}  // namespace tropjac
