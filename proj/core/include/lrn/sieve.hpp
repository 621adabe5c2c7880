#pragma once

// The exponent sieve: for C1 x^2 + C2 = y^p with p an odd prime, the primes
// p that can carry a solution are 3, 5, the special p = 7 cases with
// y in {3, 5, 9}, the primes dividing the class number of Q(sqrt(-c)), and
// the primes dividing q - (-c/q) for primes q | d with q not dividing 2c.

#include "lrn/intmath.hpp"
#include "lrn/quadfield.hpp"

#include <string>
#include <vector>

namespace lrn {

struct EquationInstance {
  Int c1;
  Int c2;
  Int c;  // squarefree part of C1*C2
  Int d;  // C1*C2 = c d^2
  bool valid = false;
  std::string invalid_reason;

  FieldPtr field() const { return QuadField::make(c); }
  /// d when -c is not 1 mod 4, 2d otherwise.
  Int d_prime() const;
  /// C1*C2/3 is a perfect square, equivalently c == 3.
  bool c1c2_over_3_square() const { return c == 3; }
};

/// Computes c, d and the validity flag (C1 squarefree, gcd(C1, C2) = 1,
/// C1*C2 != 7 mod 8). Throws std::invalid_argument only if C1 or C2 < 1.
EquationInstance make_instance(const Int& c1, const Int& c2);

/// q - (-c/q) for an odd prime q not dividing 2c.
Int b_q(const Int& q, const Int& c);

struct Special7Hit {
  Int y;
  Int x;
};

/// (y, x) with C1 x^2 + C2 = y^7, y in {3, 5, 9}, x >= 1 and gcd(C1 x^2, C2, y^7) = 1.
std::vector<Special7Hit> special7_hits(const EquationInstance& inst);

struct BqEntry {
  Int q;
  Int b_q;
  unsigned long p = 0;
};

struct ExponentReport {
  std::vector<unsigned long> base_primes{3, 5};
  std::vector<Special7Hit> special7;
  std::int64_t class_number = 0;
  std::vector<unsigned long> class_primes;  // p | h, p > 5
  std::vector<BqEntry> bq_primes;           // p | B_q, p > 5
  std::vector<unsigned long> primes;        // sorted union
};

/// Throws std::invalid_argument for invalid instances.
ExponentReport exponent_set(const EquationInstance& inst);

}  // namespace lrn
