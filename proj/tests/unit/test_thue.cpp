#include "lrn/thue.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lrn;

namespace {

ThueProblem make(std::vector<Int> coeffs, const Int& target) {
  ThueProblem p;
  p.degree = static_cast<unsigned>(coeffs.size() - 1);
  p.coefficients = std::move(coeffs);
  p.target = target;
  return p;
}

std::vector<std::pair<Int, Int>> pairs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<std::pair<Int, Int>> out;
  for (auto [r, s] : xs) out.emplace_back(r, s);
  return out;
}

}  // namespace

TEST_CASE("fixed Thue equations") {
  CHECK(thue_solve_bounded(make({1, 0, 0, 1}, 9), 10) == pairs({{1, 2}, {2, 1}}));
  CHECK(thue_solve_bounded(make({1, 0, 0, 1}, 5), 50).empty());
  std::vector<std::pair<Int, Int>> cube;
  for (long s = -4; s <= 4; ++s) cube.emplace_back(2, s);
  CHECK(thue_solve_bounded(make({1, 0, 0, 0}, 8), 4) == cube);
  // Leading coefficient zero: s (r^2 - 2 s^2) = 7 has no solutions; s r^2 = 4 has some.
  CHECK(thue_solve_bounded(make({0, 1, 0, -2}, 7), 30) == testing::brute_thue({0, 1, 0, -2}, 7, 30));
  CHECK(thue_solve_bounded(make({0, 1, 0, 0}, 4), 10) == pairs({{-2, 1}, {-1, 4}, {1, 4}, {2, 1}}));
  const auto p = make({1, 2, 3, 4}, 10);
  CHECK(p.evaluate(1, 1) == 10);
  CHECK(make({4, 6, 10}, 2).content() == 2);
}

TEST_CASE("bounded solver matches exhaustive enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> coef(-6, 6);
  for (int t = 0; t < 120; ++t) {
    const unsigned deg = (t % 3 == 0) ? 5 : 3;
    std::vector<Int> coeffs(deg + 1);
    for (auto& c : coeffs) c = coef(rng);
    // Pick a target that is attained somewhere, so the comparison is not vacuous.
    const long r0 = coef(rng), s0 = coef(rng);
    auto prob = make(coeffs, 0);
    Int target = prob.evaluate(r0, s0);
    if (target <= 0) target = 1 + (rng() % 50);
    prob.target = target;
    const std::int64_t bound = 12;
    CHECK(thue_solve_bounded(prob, bound) == testing::brute_thue(coeffs, target, bound));
  }
}

TEST_CASE("large-box solutions are found") {
  // r^3 - 2 s^3 = 1 has the solutions (1, 0) and (-1, -1).
  CHECK(thue_solve_bounded(make({1, 0, 0, -2}, 1), 1'000'000) == pairs({{-1, -1}, {1, 0}}));
  // r^3 + r^2 s - 2 r s^2 - s^3 = 1 (simplest cubic, discriminant 49): many solutions.
  const auto sols = thue_solve_bounded(make({1, 1, -2, -1}, 1), 100000);
  CHECK(sols.size() == 9);
  for (const auto& [r, s] : sols) CHECK(make({1, 1, -2, -1}, 1).evaluate(r, s) == 1);
}
