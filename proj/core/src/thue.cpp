#include "lrn/thue.hpp"

#include "lrn/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace lrn {
namespace {

using Pair = std::pair<Int, Int>;

long double to_ld(const Int& v) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

void validate(const ThueProblem& problem, std::int64_t bound) {
  if (problem.degree < 1 || problem.coefficients.size() != problem.degree + 1) {
    throw std::invalid_argument("ThueProblem: need degree + 1 coefficients");
  }
  if (problem.target < 1) throw std::invalid_argument("ThueProblem: target must be positive");
  if (bound < 0) throw std::invalid_argument("thue_solve_bounded: bound must be nonnegative");
  if (std::all_of(problem.coefficients.begin(), problem.coefficients.end(), [](const Int& c) { return c == 0; })) {
    throw std::invalid_argument("ThueProblem: zero form");
  }
}

// F(r, s) - t as a polynomial in r for fixed s.
IntPoly slice_in_r(const ThueProblem& problem, const Int& s) {
  const unsigned p = problem.degree;
  IntPoly poly(p + 1);
  Int s_pow = 1;
  for (unsigned i = 0; i <= p; ++i) {
    poly[p - i] = problem.coefficients[i] * s_pow;
    s_pow *= s;
  }
  poly[0] -= problem.target;
  return poly;
}

// Case lead == 0: s divides F(r, s) = t.
void solve_degenerate(const ThueProblem& problem, std::int64_t bound, std::set<Pair>& out) {
  for (const Int& s : divisors_signed(problem.target)) {
    if (abs(s) > bound) continue;
    const IntPoly poly = slice_in_r(problem, s);
    if (degree(poly) < 0) {
      for (std::int64_t r = -bound; r <= bound; ++r) out.emplace(Int(static_cast<long>(r)), s);
      continue;
    }
    if (degree(poly) == 0) continue;
    for (const Int& r : integer_roots(poly)) {
      if (abs(r) <= bound) out.emplace(r, s);
    }
  }
}

}  // namespace

const char* to_string(UnitVariant v) {
  switch (v) {
    case UnitVariant::One: return "1";
    case UnitVariant::Omega: return "omega";
    case UnitVariant::OmegaSquared: return "omega^2";
  }
  return "?";
}

Int ThueProblem::evaluate(const Int& r, const Int& s) const {
  Int acc = 0;
  Int s_pow = 1;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    acc = acc * r + coefficients[i] * s_pow;
    s_pow *= s;
  }
  return acc;
}

Int ThueProblem::content() const {
  Int g = 0;
  for (const Int& c : coefficients) g = gcd(g, c);
  return g;
}

std::vector<std::pair<Int, Int>> thue_solve_bounded(const ThueProblem& problem, std::int64_t bound) {
  validate(problem, bound);
  std::set<Pair> found;
  const unsigned p = problem.degree;
  const Int& lead = problem.coefficients.front();
  const Int& t = problem.target;

  if (lead == 0) {
    solve_degenerate(problem, bound, found);
    return {found.begin(), found.end()};
  }

  // s = 0: lead * r^p = t.
  if (t % lead == 0) {
    if (auto r = exact_root(t / lead, p)) {
      for (const Int& cand : {*r, Int(-*r)}) {
        if (abs(cand) <= bound && problem.evaluate(cand, 0) == t) found.emplace(cand, 0);
      }
    }
  }

  // For s != 0 some root theta of F(X, 1) satisfies |r - theta s| <= rho,
  // rho = (t / |lead|)^(1/p); once the other factors are large this shrinks to
  // t / (|lead| prod_{j != i} (sep_ij |s| - rho)).
  IntPoly dehom(p + 1);
  for (unsigned i = 0; i <= p; ++i) dehom[p - i] = problem.coefficients[i];
  const auto roots = approximate_roots(dehom);
  const std::size_t n = roots.size();

  const long double abs_lead = std::fabs(to_ld(lead));
  const long double t_ld = to_ld(t);
  const long double rho = std::pow(t_ld / abs_lead, 1.0L / p) * (1 + 1e-12L) + 1e-12L;

  bool disjoint = true;
  std::vector<std::vector<long double>> sep(n, std::vector<long double>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      sep[i][j] = std::abs(roots[i].value - roots[j].value) - roots[i].radius - roots[j].radius;
      if (sep[i][j] <= 0) disjoint = false;
    }
  }

  std::vector<long double> coeff_ld(p + 1), coeff_abs(p + 1);
  for (unsigned i = 0; i <= p; ++i) {
    coeff_ld[i] = to_ld(problem.coefficients[i]);
    coeff_abs[i] = std::fabs(coeff_ld[i]);
  }
  std::vector<long double> s_pow(p + 1);

  for (std::int64_t magnitude = 1; magnitude <= bound; ++magnitude) {
    for (int sign : {1, -1}) {
      const std::int64_t s = sign * magnitude;
      const auto s_ld = static_cast<long double>(s);
      const auto abs_s = static_cast<long double>(magnitude);
      s_pow[0] = 1;
      for (unsigned i = 1; i <= p; ++i) s_pow[i] = s_pow[i - 1] * s_ld;

      for (std::size_t i = 0; i < n; ++i) {
        const auto& root = roots[i];
        const long double im_gap = std::fabs(root.value.imag()) - root.radius;
        if (im_gap > 0 && im_gap * abs_s > rho) continue;

        long double width = rho;
        if (disjoint) {
          long double prod = 1;
          bool positive = true;
          for (std::size_t j = 0; j < n && positive; ++j) {
            if (j == i) continue;
            const long double f = sep[i][j] * abs_s - rho;
            if (f <= 0) positive = false;
            prod *= f;
          }
          if (positive) width = std::min(width, t_ld / (abs_lead * prod));
        }
        const long double centre = root.value.real() * s_ld;
        const long double slack = width + root.radius * abs_s + 1e-9L * (1 + std::fabs(centre)) + 1e-6L;
        const long double lo_ld = std::ceil(centre - slack);
        const long double hi_ld = std::floor(centre + slack);
        const auto b = static_cast<long double>(bound);
        if (hi_ld < -b || lo_ld > b) continue;
        const auto lo = static_cast<std::int64_t>(std::max(lo_ld, -b));
        const auto hi = static_cast<std::int64_t>(std::min(hi_ld, b));
        for (std::int64_t r = lo; r <= hi; ++r) {
          const auto r_ld = static_cast<long double>(r);
          long double acc = 0, acc_abs = 0;
          const long double r_abs = std::fabs(r_ld);
          for (unsigned k = 0; k <= p; ++k) {
            acc = acc * r_ld + coeff_ld[k] * s_pow[k];
            acc_abs = acc_abs * r_abs + coeff_abs[k] * std::fabs(s_pow[k]);
          }
          if (std::fabs(acc - t_ld) > 1e-12L * (acc_abs + t_ld) + 0.5L) continue;
          const Int r_big(static_cast<long>(r));
          const Int s_big(static_cast<long>(s));
          if (problem.evaluate(r_big, s_big) == t) found.emplace(r_big, s_big);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace lrn
