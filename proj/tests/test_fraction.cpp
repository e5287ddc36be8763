#include "loclaurent/examples.hpp"
#include "loclaurent/fraction.hpp"
#include "loclaurent/localization.hpp"
#include "loclaurent/series.hpp"

#include <doctest.h>

#include <vector>

using namespace loclaurent;

namespace {

ScalarPoly P(std::initializer_list<std::pair<const Degree, Scalar>> terms) {
  return ScalarPoly(ScalarRing{}, terms);
}

} // namespace

TEST_CASE("fraction_sum") {
  SUBCASE("z^2/(z-1) - 1/(z(z-1)) = z^-1 + 1 + z") {
    const std::vector<RationalFraction> terms{
        RationalFraction(P({{2, 1}}), P({{1, 1}, {0, -1}})),
        RationalFraction(P({{0, -1}}), P({{2, 1}, {1, -1}})),
    };
    CHECK(fraction_sum_to_poly(terms) == P({{-1, 1}, {0, 1}, {1, 1}}));
  }
  SUBCASE("polynomial over 1") {
    const auto p = P({{-2, 3}, {4, Scalar(1, 5)}});
    const std::vector<RationalFraction> terms{RationalFraction(p)};
    CHECK(fraction_sum_to_poly(terms) == p);
  }
  SUBCASE("non-polynomial sum") {
    const std::vector<RationalFraction> terms{RationalFraction(P({{0, 1}}), P({{1, 1}, {0, -1}}))};
    CHECK_THROWS_AS(fraction_sum_to_poly(terms), NonPolynomialSum);
  }
  SUBCASE("empty sum") {
    CHECK(fraction_sum_to_poly(std::span<const RationalFraction>{}).is_zero());
  }
  SUBCASE("zero denominator") {
    CHECK_THROWS(RationalFraction(P({{0, 1}}), ScalarPoly()));
  }
}

TEST_CASE("polynomial division and gcd") {
  const auto [q, r] = divide_polynomials(P({{3, 1}, {0, -1}}), P({{1, 1}, {0, -1}}));
  CHECK(q == P({{2, 1}, {1, 1}, {0, 1}}));
  CHECK(r.is_zero());
  // (z - 1)(z - 2) and 2(z - 1)(z + 3) share the monic factor z - 1
  const auto a = P({{2, 1}, {1, -3}, {0, 2}});
  const auto b = P({{2, 2}, {1, 4}, {0, -6}});
  CHECK(gcd_polynomials(a, b) == P({{1, 1}, {0, -1}}));
  CHECK(gcd_polynomials(ScalarPoly(), ScalarPoly()).is_zero());
}

TEST_CASE("fraction evaluation") {
  const RationalFraction f(P({{0, 1}}), P({{0, 1}, {1, -1}}));
  CHECK(f.evaluate(2) == -1);
  CHECK(f.evaluate(Scalar(1, 2)) == 2);
  CHECK_THROWS_AS(f.evaluate(1), DenominatorVanishes);
  const RationalFraction g(P({{-1, 1}}), P({{0, 1}}));
  CHECK_THROWS_AS(g.evaluate(0), DenominatorVanishes);
}

TEST_CASE("contribution fractions re-expand to the termwise series") {
  for (const auto &m : {sphere(1, 1), sphere(3, 1), shifted_sphere(), cp2_triangle(3, 2)}) {
    for (const auto &c : m.components) {
      const auto f = contribution_fraction(c);
      const Degree order = 20;
      // numerator * den^-1 at zero, with a wide enough inverse to be exact through `order`
      const auto den = f.denominator();
      const auto inv = invert_at_zero(den, order + den.max_degree() + f.numerator().size() + 40);
      const auto expanded =
          (embed(f.numerator(), Direction::AtZero, inv.high()) * inv).truncated(order);
      const auto direct = contribution(c, Direction::AtZero, order);
      for (Degree d = -10; d <= order; ++d) {
        CHECK(expanded.coeff(d) == direct.coeff(d));
      }
    }
  }
}
