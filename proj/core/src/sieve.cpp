#include "lrn/sieve.hpp"

#include "lrn/lehmer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lrn {

Int EquationInstance::d_prime() const {
  return field()->half_integral() ? Int(2 * d) : d;
}

EquationInstance make_instance(const Int& c1, const Int& c2) {
  if (c1 < 1 || c2 < 1) throw std::invalid_argument("make_instance: C1 and C2 must be positive");
  EquationInstance inst;
  inst.c1 = c1;
  inst.c2 = c2;
  const SquarefreeSplit split = squarefree_split(c1 * c2);
  inst.c = split.c;
  inst.d = split.d;
  if (squarefree_split(c1).d != 1) {
    inst.invalid_reason = "C1 not squarefree";
  } else if (gcd(c1, c2) != 1) {
    inst.invalid_reason = "gcd(C1,C2) != 1";
  } else if ((c1 * c2) % 8 == 7) {
    inst.invalid_reason = "C1*C2 = 7 mod 8";
  } else {
    inst.valid = true;
  }
  return inst;
}

Int b_q(const Int& q, const Int& c) {
  if (q == 2 || !is_prime(q)) throw std::invalid_argument("b_q: q must be an odd prime");
  if ((2 * c) % q == 0) throw std::invalid_argument("b_q: q must not divide 2c");
  return q - jacobi(-c, q);
}

std::vector<Special7Hit> special7_hits(const EquationInstance& inst) {
  std::vector<Special7Hit> hits;
  for (long y : defective_y_values(7)) {
    const Int y7 = ipow(Int(y), 7);
    const Int rest = y7 - inst.c2;
    if (rest <= 0 || rest % inst.c1 != 0) continue;
    const auto x = is_square(rest / inst.c1);
    if (!x || *x == 0) continue;
    if (gcd(gcd(inst.c1 * *x * *x, inst.c2), y7) != 1) continue;
    hits.push_back({Int(y), *x});
  }
  return hits;
}

ExponentReport exponent_set(const EquationInstance& inst) {
  if (!inst.valid) throw std::invalid_argument("exponent_set: invalid instance (" + inst.invalid_reason + ")");
  ExponentReport report;
  std::set<unsigned long> all(report.base_primes.begin(), report.base_primes.end());

  report.special7 = special7_hits(inst);
  if (!report.special7.empty()) all.insert(7);

  report.class_number = class_number(inst.c);
  for (const Int& p : prime_divisors(Int(report.class_number))) {
    if (p > 5) report.class_primes.push_back(p.get_ui());
  }
  all.insert(report.class_primes.begin(), report.class_primes.end());

  if (inst.d > 1) {
    for (const Int& q : prime_divisors(inst.d)) {
      if (q == 2 || inst.c % q == 0) continue;
      const Int bq = b_q(q, inst.c);
      for (const Int& p : prime_divisors(bq)) {
        if (p <= 5) continue;
        report.bq_primes.push_back({q, bq, p.get_ui()});
        all.insert(p.get_ui());
      }
    }
  }
  report.primes.assign(all.begin(), all.end());
  return report;
}

}  // namespace lrn
