#pragma once

// Thue equations F(r, s) = t for homogeneous integer binary forms, solved by
// exhaustive search inside a box |r|, |s| <= bound. The search is exact; it
// is complete only relative to the bound.

#include "lrn/intmath.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lrn {

enum class UnitVariant { One, Omega, OmegaSquared };

const char* to_string(UnitVariant v);

struct ThueProblem {
  unsigned degree = 0;
  /// coefficients[i] multiplies r^(degree - i) * s^i.
  std::vector<Int> coefficients;
  Int target;
  UnitVariant unit_variant = UnitVariant::One;

  Int evaluate(const Int& r, const Int& s) const;
  /// gcd of the coefficients.
  Int content() const;
};

/// Every (r, s) with |r|, |s| <= bound and F(r, s) = t, sorted.
std::vector<std::pair<Int, Int>> thue_solve_bounded(const ThueProblem& problem, std::int64_t bound);

}  // namespace lrn
