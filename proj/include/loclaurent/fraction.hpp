#pragma once

#include "loclaurent/laurent.hpp"

#include <span>
#include <utility>

namespace loclaurent {

/// numerator / denominator with rational coefficients. Used as an exact
/// oracle independent of the series expansions.
class RationalFraction {
public:
  RationalFraction(ScalarPoly numerator, ScalarPoly denominator);

  explicit RationalFraction(ScalarPoly polynomial)
      : RationalFraction(std::move(polynomial), ScalarPoly::one(ScalarRing{})) {}

  const ScalarPoly &numerator() const noexcept { return numerator_; }
  const ScalarPoly &denominator() const noexcept { return denominator_; }

  /// Exact value at z0. Throws DenominatorVanishes at a root of the
  /// denominator (or at 0 when negative powers are involved).
  Scalar evaluate(const Scalar &z0) const;

private:
  ScalarPoly numerator_;
  ScalarPoly denominator_;
};

/// Quotient and remainder of ordinary polynomials (all degrees >= 0).
std::pair<ScalarPoly, ScalarPoly> divide_polynomials(const ScalarPoly &dividend,
                                                     const ScalarPoly &divisor);

/// Monic gcd of ordinary polynomials; gcd(0, 0) = 0.
ScalarPoly gcd_polynomials(ScalarPoly a, ScalarPoly b);

/// Sums the fractions over a common denominator and divides exactly.
/// Throws NonPolynomialSum when the remainder is nonzero.
ScalarPoly fraction_sum_to_poly(std::span<const RationalFraction> terms);

} // namespace loclaurent
