#include "lrn/lehmer.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrn {

bool is_lehmer_pair(const LehmerParams& params) {
  const auto& [A, B] = params;
  if (A == 0 || B == 0 || gcd(A, B) != 1) return false;
  if (A - 4 * B == 0) return false;
  for (const Int& u : lehmer_terms(params, 12)) {
    if (u == 0) return false;
  }
  return true;
}

std::vector<Int> lehmer_terms(const LehmerParams& params, unsigned long n) {
  const auto& [A, B] = params;
  std::vector<Int> u;
  u.reserve(n);
  const Int step = A - 2 * B;
  const Int b2 = B * B;
  for (unsigned long k = 1; k <= n; ++k) {
    switch (k) {
      case 1:
      case 2: u.emplace_back(1); break;
      case 3: u.emplace_back(A - B); break;
      case 4: u.emplace_back(step); break;
      default: u.emplace_back(step * u[k - 3] - b2 * u[k - 5]); break;
    }
  }
  return u;
}

Int lehmer_term(const LehmerParams& params, unsigned long n) {
  if (n == 0) throw std::invalid_argument("lehmer_term: n must be positive");
  return lehmer_terms(params, n).back();
}

std::optional<Int> primitive_divisor(const LehmerParams& params, unsigned long n) {
  if (n < 2) throw std::invalid_argument("primitive_divisor: n must be at least 2");
  const auto terms = lehmer_terms(params, n);
  Int m = abs(terms.back());
  if (m == 0) return std::nullopt;
  auto strip = [&m](const Int& other) {
    if (other == 0) {
      m = 1;
      return;
    }
    for (Int g = gcd(m, other); g > 1; g = gcd(m, g)) m /= g;
  };
  strip(params.A * (params.A - 4 * params.B));
  for (unsigned long k = 0; k + 1 < n && m > 1; ++k) strip(terms[k]);
  if (m == 1) return std::nullopt;
  return factor(m).factors.front().prime;
}

bool lehmer_equivalent(const LehmerParams& x, const LehmerParams& y) {
  return (x.A == y.A && x.B == y.B) || (x.A == -y.A && x.B == -y.B);
}

const std::vector<DefectiveEntry>& defective_entries() {
  static const std::vector<DefectiveEntry> entries = [] {
    std::vector<DefectiveEntry> e;
    auto add = [&e](unsigned n, long a, long b) { e.push_back({n, a, b, (a - b) / 4}); };
    add(13, 1, -7);
    for (auto [a, b] : {std::pair{1L, -7L}, {1L, -19L}, {3L, -5L}, {5L, -7L}, {13L, -3L}, {14L, -22L}}) {
      add(7, a, b);
    }
    return e;
  }();
  return entries;
}

bool is_listed_defective(const LehmerParams& params, unsigned n) {
  for (const auto& entry : defective_entries()) {
    if (entry.n == n && lehmer_equivalent(params, entry.params())) return true;
  }
  return false;
}

std::vector<long> defective_y_values(unsigned long p) {
  if (!is_prime(Int(p)) || p == 2) throw std::invalid_argument("defective_y_values: p must be an odd prime");
  // y = alpha*beta = (a - b)/4; an even y would force C1*C2 = 7 (mod 8).
  std::vector<long> ys;
  for (const auto& entry : defective_entries()) {
    if (entry.n == p && entry.y_product % 2 != 0) ys.push_back(entry.y_product);
  }
  std::sort(ys.begin(), ys.end());
  return ys;
}

}  // namespace lrn
