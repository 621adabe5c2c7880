#pragma once

// Ground truth by direct enumeration: walk y^n up to a cap and test whether
// (y^n - C2)/C1 is a positive square. No field arithmetic is used here, so
// agreement with solve() is a meaningful cross-check.

#include "lrn/intmath.hpp"
#include "lrn/solver.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lrn {

struct OracleConfig {
  Int value_cap{1'000'000'000'000};
  /// 0 means "as large as the cap allows".
  unsigned n_max = 0;
  /// Restrict to this y (used as given, no normalisation).
  std::optional<Int> fixed_y;
};

/// All (x, y, n) with y^n <= cap, 3 <= n <= n_max, C1 x^2 + C2 = y^n and the
/// gcd condition. Each hit is found on a base y that is not a perfect power
/// and then listed under every representation (y^e, n/e) with n/e >= 3.
/// Requires C1, C2 >= 1; the mod 8 restriction is not applied.
std::vector<Solution> brute_force(const Int& c1, const Int& c2, const OracleConfig& config = {});

/// Triples (C1, C2, x) with C1 squarefree, C2 >= 1, x >= 1 and C1 x^2 + C2 = y^p,
/// counted under each combination of the side conditions.
struct TripleCounts {
  std::uint64_t unrestricted = 0;
  std::uint64_t gcd_condition = 0;       // gcd(C1 x^2, C2, y^p) = 1
  std::uint64_t mod8 = 0;                // C1 C2 != 7 (mod 8)
  std::uint64_t gcd_and_mod8 = 0;
  std::uint64_t coprime_and_mod8 = 0;    // gcd(C1, C2) = 1 and mod 8
  std::uint64_t all_conditions = 0;      // all three
};

/// Requires y >= 2, p >= 1 and y^p < 2^28.
TripleCounts count_triples(const Int& y, unsigned long p);

/// The y = 5, p = 7 count under the gcd condition and C1 C2 != 7 (mod 8).
std::uint64_t count_triples_5_7();

struct GoldenRow {
  Int c1;
  Int c2;
  Int x;
  Int y;
  unsigned n = 0;

  Int value() const { return ipow(y, n); }
  friend bool operator==(const GoldenRow&, const GoldenRow&) = default;
};

struct GoldenDiff {
  /// Golden rows whose (C1, C2, x, y^n) was computed.
  std::size_t matched = 0;
  std::vector<GoldenRow> missing;
  /// Computed keys absent from the table, one entry per key.
  std::vector<GoldenRow> extra;

  bool empty() const { return missing.empty() && extra.empty(); }
};

/// Set comparison keyed on (C1, C2, x, y^n).
GoldenDiff golden_diff(const std::vector<Solution>& computed, const std::vector<GoldenRow>& rows);

}  // namespace lrn
