#include "lrn/quadfield.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace lrn {
namespace {

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a != b && !(*a == *b)) throw std::invalid_argument("quadratic elements from different fields");
}

Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Delta = D mod 2, so that tau = (Delta + sqrt(D)) / 2.
int delta_of(const QuadField& f) {
  return f.half_integral() ? 1 : 0;
}

}  // namespace

// ---------------------------------------------------------------- QuadField

QuadField::QuadField(const Int& c) : c_(c) {
  half_integral_ = floor_mod(c_, 4) == 3;
  discriminant_ = half_integral_ ? Int(-c_) : Int(-4 * c_);
}

FieldPtr QuadField::make(const Int& c) {
  if (c < 1) throw std::invalid_argument("QuadField: c must be positive");
  if (squarefree_split(c).d != 1) throw std::invalid_argument("QuadField: c must be squarefree");
  return FieldPtr(new QuadField(c));
}

int QuadField::unit_order() const {
  if (c_ == 1) return 4;
  if (c_ == 3) return 6;
  return 2;
}

std::int64_t QuadField::class_number() const {
  return lrn::class_number(c_);
}

// -------------------------------------------------------------- QuadElement

QuadElement::QuadElement(FieldPtr field, Int u, Int v, unsigned k)
    : field_(std::move(field)), u_(std::move(u)), v_(std::move(v)), k_(k) {
  if (!field_) throw std::invalid_argument("QuadElement: null field");
  if (k_ != 1 && k_ != 2 && k_ != 4) throw std::invalid_argument("QuadElement: denominator must be 1, 2 or 4");
  while (k_ > 1 && mpz_even_p(u_.get_mpz_t()) && mpz_even_p(v_.get_mpz_t())) {
    u_ /= 2;
    v_ /= 2;
    k_ /= 2;
  }
  // Left with k == 2: integral only for u, v both odd and -c = 1 mod 4.
  if (k_ == 4 || (k_ == 2 && (!field_->half_integral() || mpz_even_p(u_.get_mpz_t()) ||
                              mpz_even_p(v_.get_mpz_t())))) {
    throw std::invalid_argument("QuadElement: not an algebraic integer");
  }
}

Int QuadElement::norm() const {
  Int n = u_ * u_ + field_->c() * v_ * v_;
  if (k_ == 2) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), 4);
  return n;
}

QuadElement QuadElement::conjugate() const {
  return {field_, u_, -v_, k_};
}

std::pair<Int, Int> QuadElement::basis_coordinates() const {
  if (!field_->half_integral()) return {u_, v_};
  if (k_ == 1) return {u_ - v_, 2 * v_};
  return {Int((u_ - v_) / 2), v_};
}

QuadElement QuadElement::from_basis(FieldPtr field, const Int& x, const Int& y) {
  if (!field->half_integral()) return {std::move(field), x, y, 1};
  return {std::move(field), 2 * x + y, y, 2};
}

bool operator==(const QuadElement& a, const QuadElement& b) {
  return *a.field_ == *b.field_ && a.u_ == b.u_ && a.v_ == b.v_ && a.k_ == b.k_;
}

QuadElement operator*(const QuadElement& a, const QuadElement& b) {
  require_same_field(a.field_, b.field_);
  const Int& c = a.field_->c();
  return {a.field_, a.u_ * b.u_ - c * a.v_ * b.v_, a.u_ * b.v_ + a.v_ * b.u_, a.k_ * b.k_};
}

QuadElement operator+(const QuadElement& a, const QuadElement& b) {
  require_same_field(a.field_, b.field_);
  const unsigned k = std::max(a.k_, b.k_);
  const unsigned sa = k / a.k_, sb = k / b.k_;
  return {a.field_, a.u_ * sa + b.u_ * sb, a.v_ * sa + b.v_ * sb, k};
}

QuadElement operator-(const QuadElement& a, const QuadElement& b) {
  return a + (-b);
}

QuadElement elem_mul(const QuadElement& x, const QuadElement& y) {
  return x * y;
}

QuadElement elem_pow(const QuadElement& x, unsigned long p) {
  QuadElement result = QuadElement::integer(x.field(), 1);
  QuadElement base = x;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

std::vector<QuadElement> units(const FieldPtr& field) {
  std::vector<QuadElement> out{QuadElement::integer(field, 1), QuadElement::integer(field, -1)};
  if (field->c() == 1) {
    out.emplace_back(field, 0, 1, 1);
    out.emplace_back(field, 0, -1, 1);
  } else if (field->c() == 3) {
    for (int su : {-1, 1}) {
      for (int sv : {-1, 1}) out.emplace_back(field, su, sv, 2);
    }
  }
  return out;
}

// ---------------------------------------------------------------- QuadIdeal

QuadIdeal::QuadIdeal(FieldPtr field, Int content, Int a, Int b)
    : field_(std::move(field)), content_(std::move(content)), a_(std::move(a)), b_(std::move(b)) {
  if (!field_) throw std::invalid_argument("QuadIdeal: null field");
  if (content_ < 1 || a_ < 1) throw std::invalid_argument("QuadIdeal: content and a must be positive");
  const Int four_a = 4 * a_;
  if (floor_mod(b_ * b_ - field_->discriminant(), four_a) != 0) {
    throw std::invalid_argument("QuadIdeal: 4a must divide b^2 - D");
  }
  b_ = floor_mod(b_, 2 * a_);
}

QuadIdeal QuadIdeal::unit(FieldPtr field) {
  const int delta = delta_of(*field);
  return {std::move(field), 1, 1, delta};
}

QuadIdeal QuadIdeal::from_generators(FieldPtr field, const std::vector<QuadElement>& gens) {
  // Hermite reduction of the Z-lattice in (1, tau) coordinates to
  // Z*(A, 0) + Z*(B, C).
  Int kernel = 0;
  std::optional<std::pair<Int, Int>> pivot;
  for (const auto& g : gens) {
    require_same_field(field, g.field());
    auto [x, y] = g.basis_coordinates();
    if (y == 0) {
      kernel = gcd(kernel, x);
      continue;
    }
    if (!pivot) {
      pivot = {x, y};
      continue;
    }
    auto& [pb, pc] = *pivot;
    Int g_, s, t;
    mpz_gcdext(g_.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pc.get_mpz_t(), y.get_mpz_t());
    const Int eliminated = (y / g_) * pb - (pc / g_) * x;
    kernel = gcd(kernel, eliminated);
    pivot = std::pair<Int, Int>{s * pb + t * x, g_};
  }
  if (!pivot || kernel == 0) throw std::invalid_argument("QuadIdeal: generators do not span a rank-2 lattice");
  Int content = pivot->second;
  Int shift = pivot->first;
  if (content < 0) {
    content = -content;
    shift = -shift;
  }
  shift = floor_mod(shift, kernel);
  if (kernel % content != 0 || shift % content != 0) {
    throw std::logic_error("QuadIdeal: lattice is not an O_K-ideal");
  }
  const Int a = kernel / content;
  const Int b = 2 * (shift / content) + delta_of(*field);
  return {std::move(field), content, a, b};
}

QuadIdeal QuadIdeal::principal(const QuadElement& generator) {
  if (generator.is_zero()) throw std::invalid_argument("QuadIdeal: zero ideal");
  const FieldPtr& f = generator.field();
  const QuadElement tau = QuadElement::from_basis(f, 0, 1);
  return from_generators(f, {generator, generator * tau});
}

std::pair<QuadElement, QuadElement> QuadIdeal::basis() const {
  const int delta = delta_of(*field_);
  QuadElement first = QuadElement::integer(field_, content_ * a_);
  QuadElement second = QuadElement::from_basis(field_, content_ * ((b_ - delta) / 2), content_);
  return {std::move(first), std::move(second)};
}

QuadIdeal QuadIdeal::conjugate() const {
  return {field_, content_, a_, -b_};
}

bool QuadIdeal::contains(const QuadElement& x) const {
  require_same_field(field_, x.field());
  const auto [X, Y] = x.basis_coordinates();
  if (Y % content_ != 0) return false;
  const Int n = Y / content_;
  const Int rest = X - n * content_ * ((b_ - delta_of(*field_)) / 2);
  return rest % (content_ * a_) == 0;
}

bool operator==(const QuadIdeal& x, const QuadIdeal& y) {
  return *x.field_ == *y.field_ && x.content_ == y.content_ && x.a_ == y.a_ && x.b_ == y.b_;
}

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y) {
  require_same_field(x.field(), y.field());
  const auto [x1, x2] = x.basis();
  const auto [y1, y2] = y.basis();
  return QuadIdeal::from_generators(x.field(), {x1 * y1, x1 * y2, x2 * y1, x2 * y2});
}

QuadIdeal ideal_pow(const QuadIdeal& x, unsigned long p) {
  QuadIdeal result = QuadIdeal::unit(x.field());
  QuadIdeal base = x;
  while (p > 0) {
    if (p & 1) result = ideal_mul(result, base);
    p >>= 1;
    if (p > 0) base = ideal_mul(base, base);
  }
  return result;
}

FractionalIdeal ideal_inverse(const QuadIdeal& x) {
  return {x.conjugate(), x.norm()};
}

std::vector<QuadIdeal> primes_above(const FieldPtr& field, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("primes_above: p must be prime");
  const Int& D = field->discriminant();
  std::vector<QuadIdeal> out;
  const Int four_p = 4 * p;
  for (Int b = 0; b < 2 * p; ++b) {
    if (floor_mod(b * b - D, four_p) == 0) out.emplace_back(field, 1, p, b);
  }
  if (out.empty()) out.emplace_back(field, p, 1, delta_of(*field));
  return out;
}

QuadIdeal ramified_part(const Int& c1, const FieldPtr& field) {
  if (c1 < 1) throw std::invalid_argument("ramified_part: C1 must be positive");
  if (field->c() % c1 != 0) throw std::invalid_argument("ramified_part: C1 must divide c");
  QuadIdeal result = QuadIdeal::unit(field);
  if (c1 == 1) return result;
  for (const auto& pe : factor(c1).factors) {
    const auto above = primes_above(field, pe.prime);
    if (above.size() != 1 || above.front().norm() != pe.prime) {
      throw std::logic_error("ramified_part: prime dividing c is not ramified");
    }
    result = ideal_mul(result, above.front());
  }
  return result;
}

std::optional<QuadElement> is_principal(const QuadIdeal& ideal) {
  // An element m*a + n*(b + sqrt(D))/2 of the primitive part has norm
  // a * (a m^2 + b m n + c' n^2); principal iff that form represents 1, i.e.
  // (2am + bn)^2 = 4a + D n^2 for some integers m, n.
  const FieldPtr& f = ideal.field();
  const Int& a = ideal.a();
  const Int& b = ideal.b();
  const Int& D = f->discriminant();
  const Int two_a = 2 * a;
  const int delta = delta_of(*f);
  for (Int n = 0;; ++n) {
    const Int rhs = 4 * a + D * n * n;
    if (rhs < 0) break;
    const auto t = is_square(rhs);
    if (!t) continue;
    for (const Int& nn : {n, Int(-n)}) {
      for (const Int& tt : {*t, Int(-*t)}) {
        const Int num = tt - b * nn;
        if (num % two_a != 0) continue;
        const Int m = num / two_a;
        const Int x = m * a + nn * ((b - delta) / 2);
        return QuadElement::from_basis(f, ideal.content() * x, ideal.content() * nn);
      }
    }
  }
  return std::nullopt;
}

bool ideals_equivalent(const QuadIdeal& x, const QuadIdeal& y) {
  return is_principal(ideal_mul(x, y.conjugate())).has_value();
}

std::vector<ReducedForm> reduced_forms(std::int64_t discriminant) {
  if (discriminant >= 0) throw std::invalid_argument("reduced_forms: discriminant must be negative");
  const std::int64_t absd = -discriminant;
  std::vector<ReducedForm> out;
  for (std::int64_t a = 1; 3 * a * a <= absd; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (((b - discriminant) & 1) != 0) continue;
      const std::int64_t num = b * b - discriminant;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<QuadIdeal> class_representatives(const FieldPtr& field) {
  std::vector<QuadIdeal> out;
  for (const auto& form : reduced_forms(to_int64(field->discriminant()))) {
    out.emplace_back(field, 1, form.a, -form.b);
  }
  return out;
}

std::int64_t class_number(const Int& c) {
  static std::shared_mutex mutex;
  static std::unordered_map<std::int64_t, std::int64_t> cache;
  const std::int64_t key = to_int64(c);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const FieldPtr field = QuadField::make(c);
  const auto h = static_cast<std::int64_t>(reduced_forms(to_int64(field->discriminant())).size());
  std::unique_lock lock(mutex);
  cache.emplace(key, h);
  return h;
}

}  // namespace lrn
