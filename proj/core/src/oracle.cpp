#include "lrn/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace lrn {
namespace {

using Key = std::tuple<Int, Int, Int, Int>;

Key key_of(const Int& c1, const Int& c2, const Int& x, const Int& value) {
  return {c1, c2, x, value};
}

void try_value(const Int& c1, const Int& c2, const Int& base, unsigned n, unsigned n_cap,
               std::vector<Solution>& out) {
  const Int value = ipow(base, n);
  const Int rest = value - c2;
  if (rest <= 0 || !mpz_divisible_p(rest.get_mpz_t(), c1.get_mpz_t())) return;
  const auto x = is_square(Int(rest / c1));
  if (!x || *x == 0) return;
  if (gcd(gcd(c1 * *x * *x, c2), value) != 1) return;
  // Every factorisation n = e * m with m >= 3 gives the representation (base^e, m).
  for (unsigned e = 1; e <= n; ++e) {
    if (n % e != 0) continue;
    const unsigned m = n / e;
    if (m < 3 || m > n_cap) continue;
    if (auto sol = certify(c1, c2, *x, ipow(base, e), m, SolutionCase::Oracle, true)) {
      out.push_back(std::move(*sol));
    }
  }
}

}  // namespace

std::vector<Solution> brute_force(const Int& c1, const Int& c2, const OracleConfig& config) {
  if (c1 < 1 || c2 < 1) throw std::invalid_argument("brute_force: C1 and C2 must be positive");
  if (config.value_cap < 8) throw std::invalid_argument("brute_force: value cap must be at least 8");
  const unsigned bits = static_cast<unsigned>(mpz_sizeinbase(config.value_cap.get_mpz_t(), 2));
  const unsigned n_cap = config.n_max == 0 ? bits : config.n_max;
  if (n_cap < 3) throw std::invalid_argument("brute_force: n_max must be at least 3");

  std::vector<Solution> out;
  if (config.fixed_y) {
    const Int& y = *config.fixed_y;
    if (y < 2) throw std::invalid_argument("brute_force: fixed y must be at least 2");
    for (unsigned n = 3; n <= n_cap && ipow(y, n) <= config.value_cap; ++n) {
      const Int value = ipow(y, n);
      const Int rest = value - c2;
      if (rest <= 0 || !mpz_divisible_p(rest.get_mpz_t(), c1.get_mpz_t())) continue;
      const auto x = is_square(Int(rest / c1));
      if (!x || *x == 0) continue;
      if (auto sol = certify(c1, c2, *x, y, n, SolutionCase::Oracle, true)) out.push_back(std::move(*sol));
    }
    return out;
  }

  // The largest exponent scanned on a base is bounded by bits, so expansions
  // reaching below n_cap are still produced when n_cap < bits.
  for (Int base = 2; ipow(base, 3) <= config.value_cap; ++base) {
    if (mpz_perfect_power_p(base.get_mpz_t())) continue;
    Int value = ipow(base, 3);
    for (unsigned n = 3; value <= config.value_cap; ++n, value *= base) {
      try_value(c1, c2, base, n, n_cap, out);
    }
  }
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    return std::make_tuple(a.value(), a.n, a.x) < std::make_tuple(b.value(), b.n, b.x);
  });
  return out;
}

TripleCounts count_triples(const Int& y, unsigned long p) {
  if (y < 2 || p < 1) throw std::invalid_argument("count_triples: need y >= 2 and p >= 1");
  const Int big = ipow(y, p);
  if (big >= (Int(1) << 28)) throw std::invalid_argument("count_triples: y^p too large");
  const std::uint64_t v = big.get_ui();

  std::vector<bool> squarefree(v, true);
  for (std::uint64_t q = 2; q * q < v; ++q) {
    for (std::uint64_t m = q * q; m < v; m += q * q) squarefree[m] = false;
  }
  std::vector<std::uint64_t> primes_of_v;
  for (const Int& q : prime_divisors(big)) primes_of_v.push_back(q.get_ui());

  auto coprime_to_v = [&](std::uint64_t n) {
    return std::none_of(primes_of_v.begin(), primes_of_v.end(), [&](std::uint64_t q) { return n % q == 0; });
  };
  auto ugcd = [](std::uint64_t a, std::uint64_t b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
  };

  TripleCounts counts;
  for (std::uint64_t x = 1; x * x < v; ++x) {
    for (std::uint64_t c1 = 1; c1 * x * x < v; ++c1) {
      if (!squarefree[c1]) continue;
      const std::uint64_t lhs = c1 * x * x;
      const std::uint64_t c2 = v - lhs;
      // gcd(C1 x^2, C2, v) = gcd(C1 x^2, v) since C2 = v - C1 x^2.
      const bool g = coprime_to_v(lhs);
      const bool m8 = ((c1 % 8) * (c2 % 8)) % 8 != 7;
      const bool cop = ugcd(c1, c2) == 1;
      ++counts.unrestricted;
      if (g) ++counts.gcd_condition;
      if (m8) ++counts.mod8;
      if (g && m8) ++counts.gcd_and_mod8;
      if (cop && m8) ++counts.coprime_and_mod8;
      if (g && m8 && cop) ++counts.all_conditions;
    }
  }
  return counts;
}

std::uint64_t count_triples_5_7() {
  return count_triples(5, 7).gcd_and_mod8;
}

GoldenDiff golden_diff(const std::vector<Solution>& computed, const std::vector<GoldenRow>& rows) {
  std::set<Key> have;
  for (const Solution& s : computed) have.insert(key_of(s.c1, s.c2, s.x, s.value()));
  std::set<Key> want;
  for (const GoldenRow& r : rows) want.insert(key_of(r.c1, r.c2, r.x, r.value()));

  GoldenDiff diff;
  for (const GoldenRow& r : rows) {
    if (have.count(key_of(r.c1, r.c2, r.x, r.value()))) {
      ++diff.matched;
    } else {
      diff.missing.push_back(r);
    }
  }
  std::set<Key> reported;
  for (const Solution& s : computed) {
    const Key k = key_of(s.c1, s.c2, s.x, s.value());
    if (want.count(k) || !reported.insert(k).second) continue;
    diff.extra.push_back({s.c1, s.c2, s.x, s.y, s.n});
  }
  return diff;
}

}  // namespace lrn
