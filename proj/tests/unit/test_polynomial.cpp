#include "lrn/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace lrn;

TEST_CASE("evaluate and degree") {
  const IntPoly p{8, 0, -20, 0, 5};
  CHECK(evaluate(p, 2) == 8);
  CHECK(degree(p) == 4);
  CHECK(degree(IntPoly{3, 0, 0}) == 0);
  CHECK(degree(IntPoly{0, 0}) == -1);
}

TEST_CASE("integer roots") {
  CHECK(integer_roots(IntPoly{0, 0, -20, 0, 5}) == std::vector<Int>{-2, 0, 2});
  CHECK(integer_roots(IntPoly{8, 0, -20, 0, 5}).empty());
  CHECK(integer_roots(IntPoly{7}).empty());
  CHECK_THROWS(integer_roots(IntPoly{0, 0}));
  // (x - 3)(x + 5)(2x - 1) = 2x^3 + 3x^2 - 32x + 15
  CHECK(integer_roots(IntPoly{15, -32, 3, 2}) == std::vector<Int>{-5, 3});
  // A huge constant term with small roots only: (x - 1)(x + 1)(x^2 + 2^100).
  const Int big = Int(1) << 100;
  CHECK(integer_roots(IntPoly{-big, 0, big - 1, 0, 1}) == std::vector<Int>{-1, 1});
}

TEST_CASE("integer roots of random products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> root(-60, 60);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> roots;
    IntPoly p{1};
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      const long r = root(rng);
      roots.push_back(r);
      IntPoly q(p.size() + 1, 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 1] += p[j];
        q[j] -= r * p[j];
      }
      p = q;
    }
    // Irreducible quadratic factor x^2 + 3 keeps some of the tests non-split.
    if (t % 2) {
      IntPoly q(p.size() + 2, 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 2] += p[j];
        q[j] += 3 * p[j];
      }
      p = q;
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    std::vector<Int> want(roots.begin(), roots.end());
    CHECK(integer_roots(p) == want);
  }
}

TEST_CASE("approximate roots enclose the true roots") {
  // (x - 1)(x - 2)(x + 3)(x^2 + 1)
  const IntPoly p{6, -7, 6, -6, 0, 1};
  const auto roots = approximate_roots(p);
  REQUIRE(roots.size() == 5);
  const std::vector<std::complex<long double>> truth{{1, 0}, {2, 0}, {-3, 0}, {0, 1}, {0, -1}};
  for (const auto& z : truth) {
    bool covered = false;
    for (const auto& r : roots) {
      if (std::abs(r.value - z) <= r.radius) covered = true;
    }
    CHECK(covered);
  }
  CHECK(root_modulus_bound(p) >= 3.0L);
}
