#pragma once

// Resolution of C1 x^2 + C2 = y^n for a fixed valid (C1, C2).
//
// Every n >= 3 is divisible by 4 or by an odd prime, so it suffices to solve
// for n = 4 and for the odd primes p produced by the exponent sieve:
//
//   Case I    p odd, p does not divide h_K, and not (p = 3 with c = 3).
//             C1 x + d sqrt(-c) = delta^p / C1^((p-1)/2) with delta = r + s sqrt(-c)
//             (or (r + s sqrt(-c))/2); s runs over divisors of d' and r over the
//             integer roots of an explicit polynomial f_s. Exhaustive.
//   Case II   the remaining odd primes. One Thue equation F(r, s) = t per class
//             representative b with a * conj(b)^p principal (and per unit
//             variant when c = 3, p = 3), solved inside a box.
//   Case III  n = 4 by scanning y, each hit checked against the integral point
//             (C1 y^2, C1^2 x y) on Y^2 = X^3 - C1^2 C2 X.

#include "lrn/intmath.hpp"
#include "lrn/polynomial.hpp"
#include "lrn/quadfield.hpp"
#include "lrn/sieve.hpp"
#include "lrn/thue.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lrn {

enum class SolutionCase { CaseI, CaseII, CaseIII, Special7, Oracle };

const char* to_string(SolutionCase kind);
std::optional<SolutionCase> parse_solution_case(std::string_view text);

struct Solution {
  Int c1;
  Int c2;
  Int x;
  Int y;
  unsigned n = 0;
  SolutionCase kind = SolutionCase::CaseI;
  /// False when the producing method was limited by a search bound.
  bool complete = false;
  /// Set when y is itself a perfect power, e.g. "y = 3^4".
  std::string note;

  Int value() const { return ipow(y, n); }
};

/// x >= 1, y >= 2, n >= 3, C1 x^2 + C2 = y^n and gcd(C1 x^2, C2, y^n) = 1.
bool satisfies_equation(const Int& c1, const Int& c2, const Int& x, const Int& y, unsigned n);

/// A Solution if the triple satisfies the equation, otherwise nothing.
std::optional<Solution> certify(const Int& c1, const Int& c2, const Int& x, const Int& y, unsigned n,
                                SolutionCase kind, bool complete);

struct SolveOptions {
  std::int64_t thue_bound = 1'000'000;
  std::int64_t case3_bound = 1'000'000;
  /// Try the units omega, omega^2 in Case II when c = 3 and p = 3.
  bool unit_variants = true;
};

/// Whether p is handled by Case II: p | h, or p = 3 and C1 C2 / 3 is a square.
bool routes_to_case2(const EquationInstance& inst, unsigned long p);

// ------------------------------------------------------------------ Case I

struct CaseIPolynomial {
  Int s;
  unsigned long p = 0;
  /// Ascending; degree p - 1 with leading coefficient p.
  IntPoly coefficients;
  bool half_integral = false;
};

CaseIPolynomial case1_build(const EquationInstance& inst, unsigned long p, const Int& s);
std::vector<Int> case1_roots(const CaseIPolynomial& poly);
std::optional<Solution> case1_recover(const EquationInstance& inst, unsigned long p, const Int& s, const Int& r);

/// The Lehmer pair attached to a Case I solution: A = (alpha + beta)^2, B = alpha beta = y.
struct CaseILehmerData {
  Int A;
  Int B;
  Int u_p;       // Lehmer term at p
  Int expected;  // d'/s
};
CaseILehmerData case1_lehmer_data(const EquationInstance& inst, unsigned long p, const Int& s, const Int& r,
                                  const Int& y);

// ----------------------------------------------------------------- Case II

struct Case2Branch {
  ThueProblem problem;
  QuadIdeal class_rep;
  /// mu * gamma, where gamma generates a * conj(b)^p.
  QuadElement multiplier;
  /// N(b)^p: mu gamma delta^p = N(b)^p (C1 x + d sqrt(-c)).
  Int scale;
};

std::vector<Case2Branch> case2_reduce(const EquationInstance& inst, unsigned long p, bool unit_variants = true);
std::optional<Solution> case2_recover(const EquationInstance& inst, const Case2Branch& branch, const Int& r,
                                      const Int& s);
std::vector<Solution> case2_solve(const EquationInstance& inst, unsigned long p, const SolveOptions& options);

// ---------------------------------------------------------------- Case III

std::vector<Solution> case3_solve(const EquationInstance& inst, std::int64_t bound);

// ----------------------------------------------------------- Orchestration

/// All solutions at n = 4 and at every sieved odd prime. Throws
/// std::invalid_argument for invalid instances.
std::vector<Solution> solve(const EquationInstance& inst, const SolveOptions& options = {});
std::vector<Solution> solve(const Int& c1, const Int& c2, const SolveOptions& options = {});

}  // namespace lrn
