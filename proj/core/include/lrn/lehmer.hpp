#pragma once

// Lehmer pairs represented by the integers A = (alpha + beta)^2 and
// B = alpha * beta; alpha and beta themselves are never materialised.

#include "lrn/intmath.hpp"

#include <optional>
#include <vector>

namespace lrn {

struct LehmerParams {
  Int A;
  Int B;
};

/// A, B nonzero and coprime, A(A - 4B) != 0, and no vanishing term at
/// indices <= 12 (which would make alpha/beta a root of unity).
bool is_lehmer_pair(const LehmerParams& params);

/// The Lehmer sequence term u~_n, n >= 1, from
/// u~_1 = u~_2 = 1, u~_3 = A - B, u~_4 = A - 2B,
/// u~_{n+2} = (A - 2B) u~_n - B^2 u~_{n-2}.
Int lehmer_term(const LehmerParams& params, unsigned long n);

/// u~_1 .. u~_n.
std::vector<Int> lehmer_terms(const LehmerParams& params, unsigned long n);

/// The smallest prime dividing u~_n but not A(A - 4B) * u~_1 ... u~_{n-1}.
std::optional<Int> primitive_divisor(const LehmerParams& params, unsigned long n);

/// (A', B') equivalent to (A, B): equal, or both negated.
bool lehmer_equivalent(const LehmerParams& x, const LehmerParams& y);

/// A defective pair ((sqrt a + sqrt b)/2, (sqrt a - sqrt b)/2); y_product = (a - b)/4.
struct DefectiveEntry {
  unsigned n = 0;
  long a = 0;
  long b = 0;
  long y_product = 0;

  LehmerParams params() const { return {a, y_product}; }
};

/// Every n-defective Lehmer pair for prime n in (6, 30] up to equivalence:
/// none for 11, 17, 19, 23, 29; one for 13; six for 7.
const std::vector<DefectiveEntry>& defective_entries();

/// Whether (A, B) is equivalent to a listed n-defective pair.
bool is_listed_defective(const LehmerParams& params, unsigned n);

/// Values of y that a p-defective pair can contribute under C1*C2 != 7 (mod 8):
/// {3, 5, 9} for p = 7, nothing otherwise (the remaining entries force y even).
std::vector<long> defective_y_values(unsigned long p);

}  // namespace lrn
