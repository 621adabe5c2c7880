#include "lrn/intmath.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lrn;

TEST_CASE("factor: small fixed values") {
  CHECK(factor(1).factors.empty());
  const auto f110 = factor(110).factors;
  REQUIRE(f110.size() == 3);
  CHECK(f110[0] == PrimePower{2, 1});
  CHECK(f110[1] == PrimePower{5, 1});
  CHECK(f110[2] == PrimePower{11, 1});
  const auto f = factor(59049).factors;
  REQUIRE(f.size() == 1);
  CHECK(f[0] == PrimePower{3, 10});
  CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor: agrees with trial division on random n <= 1e12") {
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1'000'000'000'000ULL);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = dist(rng);
    const auto got = factor(Int(static_cast<unsigned long>(n)));
    CHECK(got.product() == Int(static_cast<unsigned long>(n)));
    const auto want = testing::naive_factor(n);
    REQUIRE(got.factors.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      CHECK(got.factors[k].prime == Int(static_cast<unsigned long>(want[k].first)));
      CHECK(got.factors[k].exponent == want[k].second);
      CHECK(testing::naive_is_prime(want[k].first));
    }
  }
}

TEST_CASE("factor: rho path on semiprimes with large factors") {
  const Int p("1000000000039");
  const Int q("999999999989");
  const auto f = factor(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].prime == q);
  CHECK(f.factors[1].prime == p);
  const auto sq = factor(p * p * 7);
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.factors[1] == PrimePower{p, 2});
}

TEST_CASE("is_prime matches trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    CHECK_MESSAGE(is_prime(Int(static_cast<unsigned long>(n))) == testing::naive_is_prime(n), n);
  }
  CHECK(is_prime(Int("18446744073709551557")));  // largest prime below 2^64
  CHECK_FALSE(is_prime(Int("3825123056546413051")));  // strong pseudoprime to bases 2..23
}

TEST_CASE("squarefree_split") {
  auto s = squarefree_split(2);
  CHECK(s.c == 2);
  CHECK(s.d == 1);
  s = squarefree_split(50);
  CHECK(s.c == 2);
  CHECK(s.d == 5);
  s = squarefree_split(1);
  CHECK(s.c == 1);
  CHECK(s.d == 1);
  for (unsigned long n = 1; n <= 3000; ++n) {
    const auto sp = squarefree_split(n);
    CHECK(sp.c * sp.d * sp.d == n);
    for (const auto& pe : factor(sp.c).factors) CHECK(pe.exponent == 1);
  }
}

TEST_CASE("jacobi") {
  CHECK(jacobi(-2, 5) == -1);
  CHECK(jacobi(0, 3) == 0);
  for (long m = 1; m < 60; m += 2) CHECK(jacobi(1, m) == 1);
  CHECK_THROWS_AS(jacobi(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(jacobi(3, -3), std::invalid_argument);

  for (std::uint32_t p : primes_below(1000)) {
    if (p == 2) continue;
    std::vector<bool> square(p, false);
    for (std::uint32_t k = 1; k < p; ++k) square[(std::uint64_t{k} * k) % p] = true;
    for (std::uint32_t a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (square[a] ? 1 : -1);
      CHECK(jacobi(a, p) == expected);
    }
  }
  for (long a = -20; a <= 20; ++a) {
    for (long b = -20; b <= 20; ++b) {
      for (long p : {3L, 7L, 13L, 101L}) CHECK(jacobi(a, p) * jacobi(b, p) == jacobi(a * b, p));
    }
  }
}

TEST_CASE("is_square") {
  CHECK(is_square(1089) == Int(33));
  CHECK_FALSE(is_square(2));
  CHECK(is_square(0) == Int(0));
  CHECK_FALSE(is_square(-4));
  for (long k = 0; k <= 100000; ++k) {
    const Int sq = Int(k) * k;
    REQUIRE(is_square(sq) == Int(k));
    if (k >= 2) {
      REQUIRE_FALSE(is_square(sq + 1));
      REQUIRE_FALSE(is_square(sq - 1));
    }
  }
}

TEST_CASE("divisors_signed") {
  CHECK(divisors_signed(1) == std::vector<Int>{1, -1});
  CHECK(divisors_signed(6) == std::vector<Int>{1, -1, 2, -2, 3, -3, 6, -6});
  CHECK(divisors_signed(-4) == std::vector<Int>{1, -1, 2, -2, 4, -4});
  CHECK_THROWS_AS(divisors_signed(0), std::invalid_argument);
}

TEST_CASE("perfect powers and roots") {
  const auto pp = perfect_power(Int(531441));  // 3^12
  CHECK(pp.base == 3);
  CHECK(pp.exponent == 12);
  CHECK(perfect_power(Int(12)).exponent == 1);
  CHECK(exact_root(Int(-125), 3) == Int(-5));
  CHECK_FALSE(exact_root(Int(-16), 2));
  CHECK_FALSE(exact_root(Int(17), 2));
}

TEST_CASE("int64 conversion and parsing") {
  CHECK(to_int64(Int("-9223372036854775808")) == INT64_MIN);
  CHECK_THROWS_AS(to_int64(Int("9223372036854775808")), std::overflow_error);
  CHECK(parse_int("-17") == -17);
  CHECK_THROWS_AS(parse_int("12a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
}
