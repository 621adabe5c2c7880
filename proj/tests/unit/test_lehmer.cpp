#include "lrn/lehmer.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace lrn;

TEST_CASE("lehmer terms: fixed values") {
  const LehmerParams p{1, 2};
  CHECK(lehmer_term(p, 13) == -1);
  CHECK(lehmer_term(p, 7) == 7);
  CHECK(lehmer_terms(p, 7) == std::vector<Int>{1, 1, -1, -3, -1, 5, 7});
  for (long a = -3; a <= 3; ++a) CHECK(lehmer_term({a, 5}, 1) == 1);
  CHECK_THROWS_AS(lehmer_term(p, 0), std::invalid_argument);
}

TEST_CASE("recurrence matches the closed form") {
  for (long A = -20; A <= 20; ++A) {
    for (long B = -20; B <= 20; ++B) {
      if (A == 0 || B == 0) continue;
      const std::vector<Int> terms = lehmer_terms({A, B}, 30);
      for (unsigned long n = 1; n <= 30; ++n) {
        REQUIRE_MESSAGE(terms[n - 1] == testing::closed_form_lehmer(A, B, n), "A=" << A << " B=" << B << " n=" << n);
      }
    }
  }
}

TEST_CASE("divisibility along odd indices") {
  for (long A = -9; A <= 9; ++A) {
    for (long B = -9; B <= 9; ++B) {
      if (A == 0 || B == 0 || std::gcd(A, B) != 1) continue;
      const auto t = lehmer_terms({A, B}, 45);
      for (unsigned m = 1; m <= 15; m += 2) {
        for (unsigned n = m; n <= 45; n += 2 * m) {
          if (t[m - 1] != 0) CHECK(t[n - 1] % t[m - 1] == 0);
        }
      }
    }
  }
}

TEST_CASE("primitive divisors") {
  const LehmerParams p{1, 2};
  CHECK_FALSE(primitive_divisor(p, 13));
  CHECK_FALSE(primitive_divisor(p, 7));
  CHECK(primitive_divisor({1, -1}, 11));
  CHECK_THROWS_AS(primitive_divisor(p, 1), std::invalid_argument);
  // (1, -1) runs through the Fibonacci numbers; 5 = A(A - 4B) is never primitive.
  CHECK(primitive_divisor({1, -1}, 7) == Int(13));
  CHECK_FALSE(primitive_divisor({1, -1}, 5));
}

TEST_CASE("equivalence and defective table") {
  CHECK(lehmer_equivalent({3, 5}, {-3, -5}));
  CHECK_FALSE(lehmer_equivalent({3, 5}, {3, -5}));
  std::size_t sevens = 0, thirteens = 0;
  for (const auto& e : defective_entries()) {
    CHECK(e.a - e.b == 4 * e.y_product);
    if (e.n == 7) ++sevens;
    if (e.n == 13) ++thirteens;
    CHECK(is_listed_defective(e.params(), e.n));
  }
  CHECK(sevens == 6);
  CHECK(thirteens == 1);
  CHECK(defective_y_values(7) == std::vector<long>{3, 5, 9});
  CHECK(defective_y_values(11).empty());
  CHECK(defective_y_values(13).empty());
  CHECK_THROWS_AS(defective_y_values(9), std::invalid_argument);
}

TEST_CASE("primitive divisor exists except at listed defective pairs") {
  for (long A = -15; A <= 15; ++A) {
    for (long B = -15; B <= 15; ++B) {
      const LehmerParams p{A, B};
      if (!is_lehmer_pair(p)) continue;
      CHECK(primitive_divisor(p, 11));
      for (unsigned n : {7u, 13u}) {
        const bool has = primitive_divisor(p, n).has_value();
        CHECK_MESSAGE(has != is_listed_defective(p, n), "A=" << A << " B=" << B << " n=" << n);
      }
    }
  }
}

TEST_CASE("lehmer pair conditions") {
  CHECK(is_lehmer_pair({1, 2}));
  CHECK_FALSE(is_lehmer_pair({2, 4}));   // not coprime
  CHECK_FALSE(is_lehmer_pair({4, 1}));   // A - 4B = 0
  CHECK_FALSE(is_lehmer_pair({1, 1}));   // alpha/beta a sixth root of unity
  CHECK_FALSE(is_lehmer_pair({0, 3}));
}
