#include "lrn/solver.hpp"

#include "lrn/lehmer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace lrn {
namespace {

bool is_odd_prime(unsigned long p) {
  return p >= 3 && is_prime(Int(p));
}

void require_valid(const EquationInstance& inst, const char* where) {
  if (!inst.valid) {
    throw std::invalid_argument(std::string(where) + ": invalid instance (" + inst.invalid_reason + ")");
  }
}

std::string perfect_power_note(const Int& y) {
  const PerfectPower pp = perfect_power(y);
  if (pp.exponent < 2) return {};
  return "y = " + pp.base.get_str() + "^" + std::to_string(pp.exponent);
}

// Coefficient vector of F(r, s) = Im-part of (g1 + g2 sqrt(-c)) (r + s sqrt(-c))^p,
// indexed so that entry j multiplies r^(p-j) s^j.
std::vector<Int> case2_form(const Int& g1, const Int& g2, const Int& c, unsigned long p) {
  std::vector<Int> coeffs(p + 1);
  const Int minus_c = -c;
  for (unsigned long j = 0; j <= p; ++j) {
    const Int b = binomial(p, j);
    if (j % 2 == 0) {
      coeffs[j] = g2 * b * ipow(minus_c, j / 2);
    } else {
      coeffs[j] = g1 * b * ipow(minus_c, (j - 1) / 2);
    }
  }
  return coeffs;
}

using u128 = unsigned __int128;

u128 isqrt128(u128 n) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Quadratic residues modulo 5040 = 16 * 9 * 5 * 7, used to discard most y
// in the n = 4 scan before any wide arithmetic.
constexpr unsigned kResidueModulus = 5040;

std::vector<bool> square_residues() {
  std::vector<bool> sq(kResidueModulus, false);
  for (unsigned i = 0; i < kResidueModulus; ++i) sq[(i * i) % kResidueModulus] = true;
  return sq;
}

void push_if_case3(const EquationInstance& inst, const Int& y, std::vector<Solution>& out) {
  const Int y4 = ipow(y, 4);
  const Int rest = y4 - inst.c2;
  if (rest <= 0 || !mpz_divisible_p(rest.get_mpz_t(), inst.c1.get_mpz_t())) return;
  const auto x = is_square(Int(rest / inst.c1));
  if (!x || *x == 0) return;
  auto sol = certify(inst.c1, inst.c2, *x, y, 4, SolutionCase::CaseIII, false);
  if (!sol) return;
  // Integral point (C1 y^2, C1^2 x y) on Y^2 = X^3 - C1^2 C2 X.
  const Int X = inst.c1 * y * y;
  const Int Y = inst.c1 * inst.c1 * *x * y;
  if (Y * Y != X * X * X - inst.c1 * inst.c1 * inst.c2 * X) {
    throw std::logic_error("case3: elliptic model identity failed for y = " + y.get_str());
  }
  out.push_back(std::move(*sol));
}

}  // namespace

const char* to_string(SolutionCase kind) {
  switch (kind) {
    case SolutionCase::CaseI: return "CaseI";
    case SolutionCase::CaseII: return "CaseII";
    case SolutionCase::CaseIII: return "CaseIII";
    case SolutionCase::Special7: return "Special7";
    case SolutionCase::Oracle: return "Oracle";
  }
  return "?";
}

std::optional<SolutionCase> parse_solution_case(std::string_view text) {
  for (auto k : {SolutionCase::CaseI, SolutionCase::CaseII, SolutionCase::CaseIII, SolutionCase::Special7,
                 SolutionCase::Oracle}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

bool satisfies_equation(const Int& c1, const Int& c2, const Int& x, const Int& y, unsigned n) {
  if (x < 1 || y < 2 || n < 3) return false;
  const Int lhs = c1 * x * x;
  const Int value = ipow(y, n);
  if (lhs + c2 != value) return false;
  return gcd(gcd(lhs, c2), value) == 1;
}

std::optional<Solution> certify(const Int& c1, const Int& c2, const Int& x, const Int& y, unsigned n,
                                SolutionCase kind, bool complete) {
  if (!satisfies_equation(c1, c2, x, y, n)) return std::nullopt;
  return Solution{c1, c2, x, y, n, kind, complete, perfect_power_note(y)};
}

bool routes_to_case2(const EquationInstance& inst, unsigned long p) {
  require_valid(inst, "routes_to_case2");
  if (p == 3 && inst.c1c2_over_3_square()) return true;
  return class_number(inst.c) % static_cast<std::int64_t>(p) == 0;
}

// ------------------------------------------------------------------ Case I

CaseIPolynomial case1_build(const EquationInstance& inst, unsigned long p, const Int& s) {
  require_valid(inst, "case1_build");
  if (!is_odd_prime(p)) throw std::invalid_argument("case1_build: p must be an odd prime");
  if (routes_to_case2(inst, p)) throw std::invalid_argument("case1_build: p is handled by the Thue reduction");
  const Int dp = inst.d_prime();
  if (s == 0 || !mpz_divisible_p(dp.get_mpz_t(), s.get_mpz_t())) {
    throw std::invalid_argument("case1_build: s must divide d' = " + dp.get_str());
  }
  CaseIPolynomial poly;
  poly.s = s;
  poly.p = p;
  poly.half_integral = inst.field()->half_integral();
  poly.coefficients.assign(p, 0);
  const Int step = -inst.c * s * s;
  for (unsigned long j = 0; 2 * j + 1 <= p; ++j) {
    poly.coefficients[p - 1 - 2 * j] = binomial(p, 2 * j + 1) * ipow(step, j);
  }
  Int shift = inst.d * ipow(inst.c1, (p - 1) / 2);
  if (poly.half_integral) shift <<= p;
  if (!mpz_divisible_p(shift.get_mpz_t(), s.get_mpz_t())) {
    throw std::logic_error("case1_build: constant adjustment is not integral");
  }
  poly.coefficients[0] -= shift / s;
  return poly;
}

std::vector<Int> case1_roots(const CaseIPolynomial& poly) {
  if (degree(poly.coefficients) < 1) return {};
  return integer_roots(poly.coefficients);
}

CaseILehmerData case1_lehmer_data(const EquationInstance& inst, unsigned long p, const Int& s, const Int& r,
                                  const Int& y) {
  const bool half = inst.field()->half_integral();
  const Int num = half ? Int(r * r) : Int(4 * r * r);
  if (!mpz_divisible_p(num.get_mpz_t(), inst.c1.get_mpz_t())) {
    throw std::logic_error("case1: A is not integral");
  }
  CaseILehmerData data;
  data.A = num / inst.c1;
  data.B = y;
  data.u_p = lehmer_term({data.A, data.B}, p);
  data.expected = inst.d_prime() / s;
  return data;
}

std::optional<Solution> case1_recover(const EquationInstance& inst, unsigned long p, const Int& s, const Int& r) {
  require_valid(inst, "case1_recover");
  const FieldPtr field = inst.field();
  const bool half = field->half_integral();
  if (half && mpz_odd_p(Int(r - s).get_mpz_t())) return std::nullopt;
  const QuadElement delta(field, r, s, half ? 2 : 1);
  const QuadElement power = elem_pow(delta, p);
  if (power.denominator() != 1) return std::nullopt;
  const Int scale = ipow(inst.c1, (p - 1) / 2);
  if (power.v() != scale * inst.d) return std::nullopt;
  const Int xs = scale * inst.c1;
  if (!mpz_divisible_p(power.u().get_mpz_t(), xs.get_mpz_t())) return std::nullopt;
  const Int x = power.u() / xs;
  const Int norm = delta.norm();
  if (!mpz_divisible_p(norm.get_mpz_t(), inst.c1.get_mpz_t())) return std::nullopt;
  const Int y = norm / inst.c1;
  auto sol = certify(inst.c1, inst.c2, x, y, static_cast<unsigned>(p), SolutionCase::CaseI, true);
  if (!sol) return std::nullopt;

  const CaseILehmerData lehmer = case1_lehmer_data(inst, p, s, r, y);
  if (lehmer.A == 0 || gcd(lehmer.A, lehmer.B) != 1 || lehmer.u_p != lehmer.expected) {
    throw std::logic_error("case1: Lehmer postcheck failed at (" + inst.c1.get_str() + ", " + inst.c2.get_str() +
                           "), p = " + std::to_string(p));
  }
  return sol;
}

// ----------------------------------------------------------------- Case II

std::vector<Case2Branch> case2_reduce(const EquationInstance& inst, unsigned long p, bool unit_variants) {
  require_valid(inst, "case2_reduce");
  if (!is_odd_prime(p)) throw std::invalid_argument("case2_reduce: p must be an odd prime");
  if (!routes_to_case2(inst, p)) throw std::invalid_argument("case2_reduce: p is handled by Case I");
  const FieldPtr field = inst.field();
  const bool half = field->half_integral();
  const QuadIdeal a = ramified_part(inst.c1, field);

  std::vector<std::pair<QuadElement, UnitVariant>> mus{{QuadElement::integer(field, 1), UnitVariant::One}};
  if (unit_variants && p == 3 && inst.c == 3) {
    const QuadElement omega(field, -1, 1, 2);
    mus.emplace_back(omega, UnitVariant::Omega);
    mus.emplace_back(omega * omega, UnitVariant::OmegaSquared);
  }

  const unsigned k_delta = half ? 2 : 1;
  std::vector<Case2Branch> out;
  for (const QuadIdeal& b : class_representatives(field)) {
    const QuadIdeal j = ideal_mul(a, ideal_pow(b.conjugate(), p));
    const auto gamma = is_principal(j);
    if (!gamma) continue;
    const Int nb_p = ipow(b.norm(), p);
    for (const auto& [mu, variant] : mus) {
      const QuadElement m = mu * *gamma;
      ThueProblem problem;
      problem.degree = static_cast<unsigned>(p);
      problem.coefficients = case2_form(m.u(), m.v(), inst.c, p);
      problem.target = Int(m.denominator()) * ipow(Int(k_delta), p) * nb_p * inst.d;
      problem.unit_variant = variant;
      const Int g = problem.content();
      if (g == 0) continue;
      if (!mpz_divisible_p(problem.target.get_mpz_t(), g.get_mpz_t())) continue;
      for (Int& co : problem.coefficients) co /= g;
      problem.target /= g;
      out.push_back({std::move(problem), b, m, nb_p});
    }
  }
  return out;
}

std::optional<Solution> case2_recover(const EquationInstance& inst, const Case2Branch& branch, const Int& r,
                                      const Int& s) {
  const FieldPtr field = inst.field();
  const bool half = field->half_integral();
  if (half && mpz_odd_p(Int(r - s).get_mpz_t())) return std::nullopt;
  if (r == 0 && s == 0) return std::nullopt;
  const QuadElement delta(field, r, s, half ? 2 : 1);
  const QuadElement z = branch.multiplier * elem_pow(delta, branch.problem.degree);
  if (z.denominator() != 1) return std::nullopt;
  if (z.v() != branch.scale * inst.d) return std::nullopt;
  const Int xs = branch.scale * inst.c1;
  if (!mpz_divisible_p(z.u().get_mpz_t(), xs.get_mpz_t())) return std::nullopt;
  const Int x = z.u() / xs;
  const Int norm = delta.norm();
  const Int nb = branch.class_rep.norm();
  if (!mpz_divisible_p(norm.get_mpz_t(), nb.get_mpz_t())) return std::nullopt;
  return certify(inst.c1, inst.c2, x, Int(norm / nb), branch.problem.degree, SolutionCase::CaseII, false);
}

std::vector<Solution> case2_solve(const EquationInstance& inst, unsigned long p, const SolveOptions& options) {
  std::vector<Solution> out;
  for (const Case2Branch& branch : case2_reduce(inst, p, options.unit_variants)) {
    for (const auto& [r, s] : thue_solve_bounded(branch.problem, options.thue_bound)) {
      if (auto sol = case2_recover(inst, branch, r, s)) out.push_back(std::move(*sol));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Case III

std::vector<Solution> case3_solve(const EquationInstance& inst, std::int64_t bound) {
  std::vector<Solution> out;
  if (bound < 2) return out;
  // Fast path: y^4 fits comfortably in 128 bits and C1 * 5040 in 64.
  const bool fast = bound <= 1'000'000'000 && inst.c1 > 0 && inst.c1 < (Int(1) << 40) && inst.c2 > 0 &&
                    inst.c2 < (Int(1) << 100);
  if (!fast) {
    for (std::int64_t y = 2; y <= bound; ++y) push_if_case3(inst, Int(static_cast<long>(y)), out);
    return out;
  }

  const std::uint64_t c1 = inst.c1.get_ui();
  const Int c2_hi = inst.c2 >> 64;
  const Int c2_lo = inst.c2 - (c2_hi << 64);
  const u128 c2 = (u128(c2_hi.get_ui()) << 64) | u128(c2_lo.get_ui());
  static const std::vector<bool> squares = square_residues();

  // Residue filter on y mod C1 * 5040: C1 | y^4 - C2 and the quotient a square mod 5040.
  const std::uint64_t modulus = c1 * kResidueModulus;
  const std::uint64_t c2_mod = static_cast<std::uint64_t>(c2 % modulus);
  std::vector<bool> admissible(modulus, false);
  for (std::uint64_t y = 0; y < modulus; ++y) {
    const u128 y2 = u128(y) * y % modulus;
    const std::uint64_t w = static_cast<std::uint64_t>((y2 * y2 + modulus - c2_mod) % modulus);
    if (w % c1 != 0) continue;
    admissible[y] = squares[(w / c1) % kResidueModulus];
  }

  std::uint64_t res = 2 % modulus;
  for (std::int64_t y = 2; y <= bound; ++y, res = (res + 1 == modulus) ? 0 : res + 1) {
    if (!admissible[res]) continue;
    const u128 yy = u128(static_cast<std::uint64_t>(y)) * static_cast<std::uint64_t>(y);
    const u128 y4 = yy * yy;
    if (y4 <= c2) continue;
    const u128 rest = y4 - c2;
    if (rest % c1 != 0) continue;
    const u128 q = rest / c1;
    const u128 root = isqrt128(q);
    if (root * root != q) continue;
    push_if_case3(inst, Int(static_cast<long>(y)), out);
  }
  return out;
}

// ----------------------------------------------------------- Orchestration

std::vector<Solution> solve(const EquationInstance& inst, const SolveOptions& options) {
  require_valid(inst, "solve");
  const ExponentReport report = exponent_set(inst);
  std::vector<Solution> all;

  for (unsigned long p : report.primes) {
    if (routes_to_case2(inst, p)) {
      auto found = case2_solve(inst, p, options);
      all.insert(all.end(), found.begin(), found.end());
      continue;
    }
    for (const Int& s : divisors_signed(inst.d_prime())) {
      const CaseIPolynomial poly = case1_build(inst, p, s);
      for (const Int& r : case1_roots(poly)) {
        if (auto sol = case1_recover(inst, p, s, r)) all.push_back(std::move(*sol));
      }
    }
  }

  auto quartic = case3_solve(inst, options.case3_bound);
  all.insert(all.end(), quartic.begin(), quartic.end());

  for (const Special7Hit& hit : report.special7) {
    if (auto sol = certify(inst.c1, inst.c2, hit.x, hit.y, 7, SolutionCase::Special7, true)) {
      all.push_back(std::move(*sol));
    }
  }

  // Case I results come first and are exhaustive, so keep the first hit per (x, y, n).
  std::vector<Solution> out;
  for (Solution& sol : all) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Solution& o) {
      return o.x == sol.x && o.y == sol.y && o.n == sol.n;
    });
    if (!seen) out.push_back(std::move(sol));
  }
  std::stable_sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    const Int va = a.value();
    const Int vb = b.value();
    if (va != vb) return va < vb;
    return a.n < b.n;
  });
  return out;
}

std::vector<Solution> solve(const Int& c1, const Int& c2, const SolveOptions& options) {
  return solve(make_instance(c1, c2), options);
}

}  // namespace lrn
