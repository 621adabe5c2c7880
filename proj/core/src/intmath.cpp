#include "lrn/intmath.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>

namespace lrn {
namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

// Bases 2..37 make Miller-Rabin deterministic below 3.317e24.
constexpr std::array<unsigned, 12> kDeterministicBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 8> kExtraBases{41, 43, 47, 53, 59, 61, 67, 71};

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = primes_below(kTrialLimit);
  return primes;
}

bool strong_probable_prime(const Int& n, const Int& d, unsigned long s, unsigned base) {
  const Int n_minus_1 = n - 1;
  Int x;
  const Int a = base;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or 0 if this polynomial constant failed.
Int brent_rho(const Int& n, unsigned long constant) {
  auto step = [&](const Int& v) { return Int((v * v + constant) % n); };
  Int y = 2, x, ys, q = 1, g = 1;
  unsigned long r = 1;
  constexpr unsigned long kBatch = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      const unsigned long limit = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < limit; ++i) {
        y = step(y);
        q = (q * abs(x - y)) % n;
      }
      g = gcd(q, n);
      k += kBatch;
    }
    r *= 2;
    if (r > (1ul << 26)) return 0;
  }
  if (g == n) {
    do {
      ys = step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  return g == n ? Int(0) : g;
}

void factor_cofactor(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    const PerfectPower pp = perfect_power(n);
    for (unsigned i = 0; i < pp.exponent; ++i) factor_cofactor(pp.base, out);
    return;
  }
  for (unsigned long constant = 1;; ++constant) {
    const Int f = brent_rho(n, constant);
    if (f != 0) {
      factor_cofactor(f, out);
      factor_cofactor(Int(n / f), out);
      return;
    }
  }
}

}  // namespace

Int Factorization::product() const {
  Int p = 1;
  for (const auto& pe : factors) p *= ipow(pe.prime, pe.exponent);
  return p;
}

std::vector<std::uint32_t> primes_below(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 3) return primes;
  std::vector<bool> composite(limit, false);
  for (std::uint32_t i = 2; i < limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned p : kDeterministicBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Int d = n - 1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  for (unsigned base : kDeterministicBases) {
    if (!strong_probable_prime(n, d, s, base)) return false;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 81) return true;
  for (unsigned base : kExtraBases) {
    if (!strong_probable_prime(n, d, s, base)) return false;
  }
  return true;
}

Factorization factor(const Int& n) {
  if (n < 1) throw std::invalid_argument("factor: n must be positive");
  Factorization result{n, {}};
  Int m = n;
  for (std::uint32_t p : trial_primes()) {
    if (Int(p) * p > m) break;
    if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    result.factors.push_back({Int(p), e});
  }
  if (m == 1) return result;
  std::vector<Int> large;
  factor_cofactor(m, large);
  std::sort(large.begin(), large.end());
  for (const Int& p : large) {
    if (!result.factors.empty() && result.factors.back().prime == p) {
      ++result.factors.back().exponent;
    } else {
      result.factors.push_back({p, 1});
    }
  }
  return result;
}

SquarefreeSplit squarefree_split(const Int& n) {
  if (n < 1) throw std::invalid_argument("squarefree_split: n must be positive");
  SquarefreeSplit split{n, 1, 1};
  for (const auto& [p, e] : factor(n).factors) {
    if (e % 2 == 1) split.c *= p;
    split.d *= ipow(p, e / 2);
  }
  return split;
}

int jacobi(const Int& a, const Int& m) {
  if (m < 1 || mpz_even_p(m.get_mpz_t())) {
    throw std::invalid_argument("jacobi: modulus must be odd and positive");
  }
  return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

std::optional<Int> is_square(const Int& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<Int> exact_root(const Int& n, unsigned long k) {
  if (k == 0) throw std::invalid_argument("exact_root: k must be positive");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  Int r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

PerfectPower perfect_power(const Int& n) {
  if (n < 2) throw std::invalid_argument("perfect_power: n must be at least 2");
  PerfectPower best{n, 1};
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    if (auto r = exact_root(n, k)) {
      best = {*r, static_cast<unsigned>(k)};
      break;
    }
  }
  return best;
}

std::vector<Int> divisors(const Int& n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be nonzero");
  std::vector<Int> divs{1};
  for (const auto& [p, e] : factor(abs(n)).factors) {
    const std::size_t count = divs.size();
    Int pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

std::vector<Int> divisors_signed(const Int& n) {
  std::vector<Int> out;
  for (const Int& d : divisors(n)) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  if (n == 0) throw std::invalid_argument("prime_divisors: n must be nonzero");
  for (const auto& pe : factor(abs(n)).factors) out.push_back(pe.prime);
  return out;
}

bool fits_int64(const Int& n) {
  return mpz_fits_slong_p(n.get_mpz_t()) != 0;
}

std::int64_t to_int64(const Int& n) {
  if (!fits_int64(n)) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
  return n.get_si();
}

std::string to_string(const Int& n) {
  return n.get_str();
}

Int parse_int(const std::string& text) {
  Int v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  return v;
}

}  // namespace lrn
