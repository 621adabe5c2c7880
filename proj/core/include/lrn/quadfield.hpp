#pragma once

// Exact arithmetic in imaginary quadratic fields K = Q(sqrt(-c)): integral
// elements, ideals of the maximal order in two-element normal form, class
// numbers from reduced forms, and principality testing with generator
// extraction.

#include "lrn/intmath.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace lrn {

class QuadField;
using FieldPtr = std::shared_ptr<const QuadField>;

/// Q(sqrt(-c)) for squarefree c >= 1, maximal order only.
class QuadField {
 public:
  /// Throws std::invalid_argument unless c is a positive squarefree integer.
  static FieldPtr make(const Int& c);

  const Int& c() const { return c_; }
  /// -4c when -c is not 1 mod 4, otherwise -c.
  const Int& discriminant() const { return discriminant_; }
  /// True when -c = 1 (mod 4), i.e. O_K contains (1 + sqrt(-c))/2.
  bool half_integral() const { return half_integral_; }
  /// 4 for c = 1, 6 for c = 3, otherwise 2.
  int unit_order() const;
  /// Computed on first use through the process-wide cache; safe for concurrent readers.
  std::int64_t class_number() const;

  bool operator==(const QuadField& other) const { return c_ == other.c_; }

 private:
  explicit QuadField(const Int& c);

  Int c_;
  Int discriminant_;
  bool half_integral_ = false;
};

/// An algebraic integer (u + v*sqrt(-c)) / k with k in {1, 2}.
class QuadElement {
 public:
  /// Canonicalises; throws std::invalid_argument if the value is not an algebraic integer.
  QuadElement(FieldPtr field, Int u, Int v, unsigned k = 1);

  static QuadElement integer(FieldPtr field, const Int& n) { return {std::move(field), n, 0, 1}; }
  static QuadElement sqrt_minus_c(FieldPtr field) { return {std::move(field), 0, 1, 1}; }

  const FieldPtr& field() const { return field_; }
  const Int& u() const { return u_; }
  const Int& v() const { return v_; }
  unsigned denominator() const { return k_; }

  /// (u^2 + c v^2) / k^2, always a nonnegative integer.
  Int norm() const;
  QuadElement conjugate() const;
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  bool is_unit() const { return norm() == 1; }

  /// Coordinates (X, Y) with respect to the integral basis {1, tau},
  /// tau = sqrt(-c) or (1 + sqrt(-c))/2.
  std::pair<Int, Int> basis_coordinates() const;
  static QuadElement from_basis(FieldPtr field, const Int& x, const Int& y);

  friend bool operator==(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator*(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator+(const QuadElement& a, const QuadElement& b);
  friend QuadElement operator-(const QuadElement& a, const QuadElement& b);
  QuadElement operator-() const { return {field_, -u_, -v_, k_}; }

 private:
  FieldPtr field_;
  Int u_;
  Int v_;
  unsigned k_ = 1;
};

QuadElement elem_mul(const QuadElement& x, const QuadElement& y);
QuadElement elem_pow(const QuadElement& x, unsigned long p);

/// The units of O_K, starting with 1.
std::vector<QuadElement> units(const FieldPtr& field);

/// content * (Z*a + Z*(b + sqrt(D))/2) with 4a | b^2 - D and 0 <= b < 2a.
class QuadIdeal {
 public:
  /// Validates and normalises b modulo 2a.
  QuadIdeal(FieldPtr field, Int content, Int a, Int b);

  static QuadIdeal unit(FieldPtr field);
  static QuadIdeal principal(const QuadElement& generator);
  /// The ideal spanned over Z by the given elements (must have rank 2).
  static QuadIdeal from_generators(FieldPtr field, const std::vector<QuadElement>& gens);

  const FieldPtr& field() const { return field_; }
  const Int& content() const { return content_; }
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  Int norm() const { return content_ * content_ * a_; }
  bool is_unit() const { return content_ == 1 && a_ == 1; }

  QuadIdeal conjugate() const;
  bool contains(const QuadElement& x) const;
  /// The Z-basis {content*a, content*(b + sqrt(D))/2}.
  std::pair<QuadElement, QuadElement> basis() const;

  friend bool operator==(const QuadIdeal& x, const QuadIdeal& y);

 private:
  FieldPtr field_;
  Int content_;
  Int a_;
  Int b_;
};

/// numerator / denominator; used for inverses of integral ideals.
struct FractionalIdeal {
  QuadIdeal numerator;
  Int denominator;
};

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y);
QuadIdeal ideal_pow(const QuadIdeal& x, unsigned long p);
/// I^{-1} = conj(I) / N(I).
FractionalIdeal ideal_inverse(const QuadIdeal& x);

/// Prime ideals above the rational prime p (one if p ramifies or is inert, two if split).
std::vector<QuadIdeal> primes_above(const FieldPtr& field, const Int& p);

/// The ideal a = p_1 ... p_r over the primes dividing C1, with a^2 = C1 * O_K.
/// Requires C1 squarefree and C1 | c.
QuadIdeal ramified_part(const Int& c1, const FieldPtr& field);

/// A generator of I when I is principal. Searches I for an element of norm N(I).
std::optional<QuadElement> is_principal(const QuadIdeal& ideal);

/// Whether I and J lie in the same ideal class.
bool ideals_equivalent(const QuadIdeal& x, const QuadIdeal& y);

/// One ideal per class, taken from the reduced forms of discriminant D.
std::vector<QuadIdeal> class_representatives(const FieldPtr& field);

struct ReducedForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
};

/// Primitive reduced forms (a, b, c) of negative discriminant D:
/// |b| <= a <= c, b >= 0 when |b| == a or a == c.
std::vector<ReducedForm> reduced_forms(std::int64_t discriminant);

/// h(Q(sqrt(-c))) by counting reduced forms. Throws for non-squarefree c.
/// Results are memoised in a process-wide cache safe for concurrent use.
std::int64_t class_number(const Int& c);

}  // namespace lrn
