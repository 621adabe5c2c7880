#pragma once

// Exact integer utilities shared by every other module: primality, complete
// factorisation, squarefree decomposition, Jacobi symbols, perfect powers and
// signed divisor enumeration. Everything here is a pure function of its
// arguments and may be called concurrently.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lrn {

using Int = mpz_class;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A complete factorisation: value == prod(prime^exponent), primes strictly increasing.
struct Factorization {
  Int value;
  std::vector<PrimePower> factors;

  Int product() const;
};

/// n == c * d^2 with c squarefree.
struct SquarefreeSplit {
  Int input;
  Int c;
  Int d;
};

/// Deterministic for n < 3.3e24 (first twelve prime bases), strong probable
/// prime test with a fixed witness set above that.
bool is_prime(const Int& n);

/// Trial division below 10^6, then Pollard rho with Brent's cycle detection.
/// Requires n >= 1; factor(1) has no factors.
Factorization factor(const Int& n);

SquarefreeSplit squarefree_split(const Int& n);

/// Jacobi symbol (a/m). Throws std::invalid_argument unless m is odd and positive.
int jacobi(const Int& a, const Int& m);

/// The nonnegative square root when n is a perfect square.
std::optional<Int> is_square(const Int& n);

/// The exact k-th root when n is a perfect k-th power (negative n allowed for odd k).
std::optional<Int> exact_root(const Int& n, unsigned long k);

/// Writes n >= 2 as base^exponent with exponent maximal.
struct PerfectPower {
  Int base;
  unsigned exponent = 1;
};
PerfectPower perfect_power(const Int& n);

/// Positive divisors of |n| in increasing order. Throws on n == 0.
std::vector<Int> divisors(const Int& n);

/// All divisors of |n| with both signs, ordered 1, -1, 2, -2, ... Throws on n == 0.
std::vector<Int> divisors_signed(const Int& n);

Int ipow(const Int& base, unsigned long exponent);
Int binomial(unsigned long n, unsigned long k);
Int gcd(const Int& a, const Int& b);

/// Distinct prime divisors of |n|, increasing.
std::vector<Int> prime_divisors(const Int& n);

/// Primes below `limit` by a sieve of Eratosthenes.
std::vector<std::uint32_t> primes_below(std::uint32_t limit);

bool fits_int64(const Int& n);
std::int64_t to_int64(const Int& n);

std::string to_string(const Int& n);
Int parse_int(const std::string& text);

}  // namespace lrn
