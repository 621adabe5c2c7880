#include "lrn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace lrn {
namespace {

// Scanning every k <= bound for k | a0 beats factoring a0 once the constant
// term outgrows what Pollard rho handles comfortably.
constexpr long double kScanLimit = 1 << 24;
constexpr std::size_t kFactorBits = 96;

long double log2_abs(const Int& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(static_cast<long double>(mant))) + exp;
}

long double to_ld(const Int& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

}  // namespace

Int evaluate(const IntPoly& poly, const Int& x) {
  Int acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long degree(const IntPoly& poly) {
  for (long k = static_cast<long>(poly.size()) - 1; k >= 0; --k) {
    if (poly[k] != 0) return k;
  }
  return -1;
}

long double root_modulus_bound(const IntPoly& poly) {
  const long n = degree(poly);
  if (n < 1) throw std::invalid_argument("root_modulus_bound: degree must be at least 1");
  const long double log_lead = log2_abs(poly[n]);
  long double best = -std::numeric_limits<long double>::infinity();
  for (long k = 1; k <= n; ++k) {
    const Int& coeff = poly[n - k];
    if (coeff == 0) continue;
    long double l = (log2_abs(coeff) - log_lead) / k;
    if (k == n) l -= 1.0L / n;  // |a_0 / (2 a_n)|^{1/n}
    best = std::max(best, l);
  }
  if (best == -std::numeric_limits<long double>::infinity()) return 0;
  return 2 * std::exp2(best);
}

std::vector<Int> integer_roots(const IntPoly& input) {
  long n = degree(input);
  if (n < 0) throw std::invalid_argument("integer_roots: zero polynomial");
  IntPoly poly(input.begin(), input.begin() + n + 1);
  std::set<Int> roots;
  if (poly.front() == 0) {
    roots.insert(0);
    auto first = std::find_if(poly.begin(), poly.end(), [](const Int& c) { return c != 0; });
    poly.erase(poly.begin(), first);
    n = static_cast<long>(poly.size()) - 1;
  }
  if (n >= 1) {
    const Int& a0 = poly.front();
    const long double bound = root_modulus_bound(poly);
    auto test = [&](const Int& r) {
      if (evaluate(poly, r) == 0) roots.insert(r);
    };
    if (mpz_sizeinbase(a0.get_mpz_t(), 2) > kFactorBits && bound <= kScanLimit) {
      const auto limit = static_cast<unsigned long>(std::floor(bound)) + 1;
      for (unsigned long k = 1; k <= limit; ++k) {
        if (!mpz_divisible_ui_p(a0.get_mpz_t(), k)) continue;
        test(Int(k));
        test(-Int(k));
      }
    } else {
      for (const Int& dv : divisors(a0)) {
        if (to_ld(dv) > bound + 1) break;
        test(dv);
        test(-dv);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<ApproxRoot> approximate_roots(const IntPoly& input) {
  using C = std::complex<long double>;
  const long n = degree(input);
  if (n < 1) throw std::invalid_argument("approximate_roots: degree must be at least 1");

  // Work with the monic polynomial in long double.
  const long double lead = to_ld(input[n]);
  std::vector<long double> m(n + 1);
  for (long k = 0; k <= n; ++k) m[k] = to_ld(input[k]) / lead;

  auto eval = [&](C z) {
    C acc = 0;
    for (long k = n; k >= 0; --k) acc = acc * z + m[k];
    return acc;
  };
  auto eval_abs = [&](long double r) {
    long double acc = 0;
    for (long k = n; k >= 0; --k) acc = acc * r + std::fabs(m[k]);
    return acc;
  };

  const long double radius = std::max(root_modulus_bound(input), 1.0L);
  std::vector<C> z(n);
  const C seed(0.4L, 0.9L);
  C power = 1;
  for (long i = 0; i < n; ++i) {
    power *= seed;
    z[i] = power * radius / std::abs(power);
  }
  constexpr long double eps = std::numeric_limits<long double>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (long i = 0; i < n; ++i) {
      C denom = 1;
      for (long j = 0; j < n; ++j) {
        if (j != i) denom *= (z[i] - z[j]);
      }
      if (denom == C(0)) denom = C(eps, eps);
      const C delta = eval(z[i]) / denom;
      z[i] -= delta;
      change = std::max(change, std::abs(delta) / (1 + std::abs(z[i])));
    }
    if (change < 4 * eps) break;
  }

  std::vector<ApproxRoot> out(n);
  for (long i = 0; i < n; ++i) {
    long double prod = 1;
    for (long j = 0; j < n; ++j) {
      if (j != i) prod *= std::abs(z[i] - z[j]);
    }
    // Residual plus a bound on its rounding error.
    const long double residual = std::abs(eval(z[i])) + 8 * (n + 2) * eps * eval_abs(std::abs(z[i]));
    long double r = prod > 0 ? 1.01L * n * residual / prod : std::numeric_limits<long double>::infinity();
    r = std::max(r, 16 * eps * (1 + std::abs(z[i])));
    out[i] = {z[i], r};
  }
  return out;
}

}  // namespace lrn
