#include "loclaurent/fraction.hpp"

#include <stdexcept>

namespace loclaurent {

namespace {

// z^shift * poly / den with poly, den ordinary polynomials and
// den(0) != 0. Any Laurent fraction can be brought to this form.
struct Normalized {
  Degree shift = 0;
  ScalarPoly num;
  ScalarPoly den;
};

Degree low_or_zero(const ScalarPoly &p) { return p.is_zero() ? 0 : p.min_degree(); }

Normalized normalize(const ScalarPoly &num, const ScalarPoly &den) {
  const Degree s = low_or_zero(num);
  const Degree t = den.min_degree();
  return {s - t, num.shifted(-s), den.shifted(-t)};
}

ScalarPoly monic(const ScalarPoly &p) {
  if (p.is_zero()) {
    return p;
  }
  return p.scaled(Scalar(1) / p.coeff(p.max_degree()));
}

void require_ordinary(const ScalarPoly &p, const char *what) {
  if (!p.is_zero() && p.min_degree() < 0) {
    throw std::invalid_argument(std::string(what) + " has negative powers of z");
  }
}

} // namespace

RationalFraction::RationalFraction(ScalarPoly numerator, ScalarPoly denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) {
    throw std::invalid_argument("rational fraction with zero denominator");
  }
}

Scalar RationalFraction::evaluate(const Scalar &z0) const {
  const Normalized n = normalize(numerator_, denominator_);
  const Scalar den = n.den.evaluate(z0);
  if (den == 0) {
    throw DenominatorVanishes("denominator vanishes at z = " + format_scalar(z0));
  }
  if (z0 == 0 && n.shift < 0 && !n.num.is_zero()) {
    throw DenominatorVanishes("pole at z = 0");
  }
  return Scalar(n.num.evaluate(z0) / den * pow(z0, n.shift));
}

std::pair<ScalarPoly, ScalarPoly> divide_polynomials(const ScalarPoly &dividend,
                                                     const ScalarPoly &divisor) {
  require_ordinary(dividend, "dividend");
  require_ordinary(divisor, "divisor");
  if (divisor.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  const Degree m = divisor.max_degree();
  const Scalar lead_inv = Scalar(1) / divisor.coeff(m);
  ScalarPoly quotient;
  ScalarPoly remainder = dividend;
  while (!remainder.is_zero() && remainder.max_degree() >= m) {
    const Degree d = remainder.max_degree();
    const Scalar c = remainder.coeff(d) * lead_inv;
    const auto step = ScalarPoly::monomial(ScalarRing{}, c, d - m);
    quotient += step;
    remainder -= step * divisor;
  }
  return {quotient, remainder};
}

ScalarPoly gcd_polynomials(ScalarPoly a, ScalarPoly b) {
  require_ordinary(a, "gcd argument");
  require_ordinary(b, "gcd argument");
  while (!b.is_zero()) {
    auto r = divide_polynomials(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

ScalarPoly fraction_sum_to_poly(std::span<const RationalFraction> terms) {
  Normalized acc{0, ScalarPoly(), ScalarPoly::one(ScalarRing{})};
  for (const auto &term : terms) {
    const Normalized t = normalize(term.numerator(), term.denominator());
    if (t.num.is_zero()) {
      continue;
    }
    if (acc.num.is_zero()) {
      acc = t;
      continue;
    }
    const Degree shift = std::min(acc.shift, t.shift);
    ScalarPoly num = acc.num.shifted(acc.shift - shift) * t.den +
                     t.num.shifted(t.shift - shift) * acc.den;
    ScalarPoly den = acc.den * t.den;
    if (num.is_zero()) {
      acc = {0, ScalarPoly(), ScalarPoly::one(ScalarRing{})};
      continue;
    }
    const ScalarPoly g = gcd_polynomials(num, den);
    if (!(g.size() == 1 && g.max_degree() == 0)) {
      num = divide_polynomials(num, g).first;
      den = divide_polynomials(den, g).first;
    }
    Normalized next = normalize(num, den);
    next.shift += shift;
    acc = std::move(next);
  }

  auto [quotient, remainder] = divide_polynomials(acc.num, acc.den);
  if (!remainder.is_zero()) {
    throw NonPolynomialSum("sum of fractions leaves remainder " + format_poly(remainder) +
                           " modulo " + format_poly(acc.den));
  }
  return quotient.shifted(acc.shift);
}

} // namespace loclaurent
