#pragma once

#include "lrn/intmath.hpp"

#include <complex>
#include <vector>

namespace lrn {

/// Integer polynomial, coefficients in ascending order of degree.
using IntPoly = std::vector<Int>;

Int evaluate(const IntPoly& poly, const Int& x);

/// Degree after dropping zero leading coefficients; -1 for the zero polynomial.
long degree(const IntPoly& poly);

/// All integer roots, sorted and distinct. A zero constant term contributes
/// the root 0 and is deflated away; the remaining candidates are divisors of
/// the constant term inside the Fujiwara root bound. Throws for the zero polynomial.
std::vector<Int> integer_roots(const IntPoly& poly);

/// Upper bound on the modulus of every complex root (Fujiwara). Requires degree >= 1.
long double root_modulus_bound(const IntPoly& poly);

struct ApproxRoot {
  std::complex<long double> value;
  /// Every root lies in the union of the disks D(value, radius).
  long double radius = 0;
};

/// Simultaneous (Weierstrass / Durand-Kerner) iteration with inclusion radii
/// n * |p(z_i)| / |lead * prod_{j != i}(z_i - z_j)|, inflated for rounding.
std::vector<ApproxRoot> approximate_roots(const IntPoly& poly);

}  // namespace lrn
