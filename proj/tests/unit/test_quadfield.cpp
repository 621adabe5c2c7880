#include "lrn/quadfield.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>

#include <random>

using namespace lrn;

namespace {

bool squarefree(long c) {
  return squarefree_split(c).d == 1;
}

QuadElement random_element(const FieldPtr& f, std::mt19937_64& rng, long span) {
  std::uniform_int_distribution<long> dist(-span, span);
  for (;;) {
    const long u = dist(rng);
    const long v = dist(rng);
    if (f->half_integral() && ((u - v) % 2 == 0) && (dist(rng) & 1)) return {f, u, v, 2};
    if (u != 0 || v != 0) return {f, u, v, 1};
  }
}

}  // namespace

TEST_CASE("field data") {
  for (long c : {1L, 2L, 3L, 5L, 7L, 110L, 51L}) {
    const auto f = QuadField::make(c);
    const Int& D = f->discriminant();
    const Int r = ((D % 4) + 4) % 4;
    CHECK((r == 0 || r == 1));
    CHECK(f->unit_order() == (c == 1 ? 4 : c == 3 ? 6 : 2));
    CHECK(units(f).size() == static_cast<std::size_t>(f->unit_order()));
  }
  CHECK(QuadField::make(2)->discriminant() == -8);
  CHECK(QuadField::make(7)->discriminant() == -7);
  CHECK_THROWS_AS(QuadField::make(4), std::invalid_argument);
  CHECK_THROWS_AS(QuadField::make(0), std::invalid_argument);
}

TEST_CASE("element arithmetic") {
  const auto f2 = QuadField::make(2);
  const QuadElement a(f2, 2, 1);
  CHECK(elem_mul(a, a) == QuadElement(f2, 2, 4));
  CHECK(elem_mul(a, QuadElement::integer(f2, 1)) == a);
  CHECK(elem_pow(QuadElement(f2, -2, 1), 5) == QuadElement(f2, 88, 4));
  CHECK(elem_pow(a, 1) == a);
  CHECK(elem_pow(a, 3) == QuadElement(f2, -4, 10));

  const auto f7 = QuadField::make(7);
  const QuadElement h(f7, 1, 1, 2);
  CHECK(elem_mul(h, h.conjugate()) == QuadElement::integer(f7, 2));
  CHECK(QuadElement(f7, 2, 4, 2).denominator() == 1);  // canonical
  CHECK_THROWS_AS(QuadElement(f7, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(QuadElement(f2, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(elem_mul(a, h), std::invalid_argument);
}

TEST_CASE("element properties on random inputs") {
  std::mt19937_64 rng(7);
  for (long c : {1L, 2L, 3L, 7L, 15L, 51L, 110L}) {
    const auto f = QuadField::make(c);
    for (int i = 0; i < 40; ++i) {
      const QuadElement x = random_element(f, rng, 30);
      const QuadElement y = random_element(f, rng, 30);
      CHECK(elem_mul(x, y).norm() == x.norm() * y.norm());
      CHECK(x.norm() >= 0);
      QuadElement acc = QuadElement::integer(f, 1);
      for (unsigned p = 1; p <= 8; ++p) {
        acc = elem_mul(acc, x);
        CHECK(elem_pow(x, p) == acc);
      }
      const auto [bx, by] = x.basis_coordinates();
      CHECK(QuadElement::from_basis(f, bx, by) == x);
    }
  }
}

TEST_CASE("ideal multiplication") {
  const auto f2 = QuadField::make(2);
  const auto above2 = primes_above(f2, 2);
  REQUIRE(above2.size() == 1);
  const QuadIdeal p2 = above2[0];
  CHECK(p2.norm() == 2);
  CHECK(ideal_mul(p2, p2) == QuadIdeal::principal(QuadElement::integer(f2, 2)));
  CHECK(ideal_mul(p2, QuadIdeal::unit(f2)) == p2);

  std::mt19937_64 rng(11);
  for (long c : {5L, 14L, 23L, 110L}) {
    const auto f = QuadField::make(c);
    std::vector<QuadIdeal> pool;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L}) {
      for (const QuadIdeal& P : primes_above(f, q)) pool.push_back(P);
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 30; ++i) {
      const QuadIdeal I = pool[pick(rng)];
      const QuadIdeal J = ideal_mul(pool[pick(rng)], pool[pick(rng)]);
      const QuadIdeal K = pool[pick(rng)];
      CHECK(ideal_mul(I, J).norm() == I.norm() * J.norm());
      CHECK(ideal_mul(I, J) == ideal_mul(J, I));
      CHECK(ideal_mul(ideal_mul(I, J), K) == ideal_mul(I, ideal_mul(J, K)));
      CHECK(ideal_mul(I, I.conjugate()) == QuadIdeal::principal(QuadElement::integer(f, I.norm())));
    }
  }
}

TEST_CASE("ramified part") {
  const auto f2 = QuadField::make(2);
  CHECK(ramified_part(1, f2).is_unit());
  const QuadIdeal a2 = ramified_part(2, f2);
  CHECK(a2.norm() == 2);
  CHECK(ideal_mul(a2, a2) == QuadIdeal::principal(QuadElement::integer(f2, 2)));
  const auto f5 = QuadField::make(5);
  const QuadIdeal a5 = ramified_part(5, f5);
  CHECK(a5.norm() == 5);
  CHECK(ideal_mul(a5, a5) == QuadIdeal::principal(QuadElement::integer(f5, 5)));
  const auto f110 = QuadField::make(110);
  const QuadIdeal a10 = ramified_part(10, f110);
  CHECK(ideal_mul(a10, a10) == QuadIdeal::principal(QuadElement::integer(f110, 10)));
  CHECK_THROWS_AS(ramified_part(3, f2), std::invalid_argument);
}

TEST_CASE("principality") {
  const auto f5 = QuadField::make(5);
  const auto unit_gen = is_principal(QuadIdeal::unit(f5));
  REQUIRE(unit_gen);
  CHECK(unit_gen->is_unit());
  CHECK_FALSE(is_principal(primes_above(f5, 2).at(0)));

  const auto f2 = QuadField::make(2);
  const QuadElement g(f2, 3, 1);
  const auto gen = is_principal(QuadIdeal::principal(g));
  REQUIRE(gen);
  CHECK(gen->norm() == 11);

  std::mt19937_64 rng(3);
  for (long c : {1L, 2L, 3L, 5L, 7L, 23L, 47L, 110L}) {
    const auto f = QuadField::make(c);
    for (int i = 0; i < 25; ++i) {
      const QuadElement x = random_element(f, rng, 700);
      if (x.norm() > 1'000'000) continue;
      const auto y = is_principal(QuadIdeal::principal(x));
      REQUIRE(y);
      CHECK(y->norm() == x.norm());
      // y / x is a unit: y * conj(x) = unit * N(x).
      const QuadElement q = elem_mul(*y, x.conjugate());
      bool unit_multiple = false;
      for (const QuadElement& u : units(f)) {
        if (q == elem_mul(u, QuadElement::integer(f, x.norm()))) unit_multiple = true;
      }
      CHECK(unit_multiple);
    }
  }
}

TEST_CASE("class representatives") {
  CHECK(class_representatives(QuadField::make(2)).size() == 1);
  const auto reps5 = class_representatives(QuadField::make(5));
  REQUIRE(reps5.size() == 2);
  CHECK(reps5[0].is_unit());
  CHECK(reps5[1].norm() == 2);

  for (long c = 1; c <= 200; ++c) {
    if (!squarefree(c)) continue;
    const auto f = QuadField::make(c);
    const auto reps = class_representatives(f);
    REQUIRE(static_cast<std::int64_t>(reps.size()) == class_number(c));
    const double limit = std::sqrt(std::abs(f->discriminant().get_d()) / 3.0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(reps[i].norm().get_d() <= limit);
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(ideals_equivalent(reps[i], reps[j]));
    }
  }
}

TEST_CASE("class numbers") {
  CHECK(class_number(1) == 1);
  CHECK(class_number(2) == 1);
  CHECK(class_number(110) == 12);
  CHECK(class_number(5) == 2);
  CHECK(class_number(23) == 3);
  CHECK_THROWS_AS(class_number(12), std::invalid_argument);
  for (long c = 1; c <= 500; ++c) {
    if (!squarefree(c)) continue;
    CHECK_MESSAGE(class_number(c) == testing::ideal_class_number(c), "c = " << c);
  }
}

TEST_CASE("reduced forms are reduced and primitive") {
  for (std::int64_t D : {-3L, -4L, -8L, -20L, -23L, -440L, -1995L}) {
    for (const ReducedForm& f : reduced_forms(D)) {
      CHECK(f.b * f.b - 4 * f.a * f.c == D);
      CHECK(std::abs(f.b) <= f.a);
      CHECK(f.a <= f.c);
      if (std::abs(f.b) == f.a || f.a == f.c) CHECK(f.b >= 0);
      CHECK(std::gcd(std::gcd(f.a, std::abs(f.b)), f.c) == 1);
    }
  }
}
