#include "loclaurent/laurent.hpp"

#include <doctest.h>

using namespace loclaurent;

namespace {

ScalarPoly P(std::initializer_list<std::pair<const Degree, Scalar>> terms) {
  return ScalarPoly(ScalarRing{}, terms);
}

} // namespace

TEST_CASE("lp_arith") {
  SUBCASE("(1 - z)(1 + z) = 1 - z^2") {
    CHECK(P({{0, 1}, {1, -1}}) * P({{0, 1}, {1, 1}}) == P({{0, 1}, {2, -1}}));
  }
  SUBCASE("shift(1 + z, -2) = z^-2 + z^-1") {
    CHECK(P({{0, 1}, {1, 1}}).shifted(-2) == P({{-2, 1}, {-1, 1}}));
  }
  SUBCASE("unit law") {
    const auto p = P({{-3, Scalar(2, 7)}, {0, -1}, {5, 4}});
    CHECK(p * ScalarPoly::one(ScalarRing{}) == p);
  }
  SUBCASE("cancellation prunes zero coefficients") {
    auto p = P({{1, 1}, {2, 3}}) - P({{2, 3}});
    CHECK(p.terms().size() == 1);
    CHECK(p == P({{1, 1}}));
    CHECK((p - p).is_zero());
  }
  SUBCASE("scalar multiple and reflection") {
    CHECK(P({{1, 2}, {-1, 1}}).scaled(Scalar(1, 2)) == P({{1, 1}, {-1, Scalar(1, 2)}}));
    CHECK(P({{3, 1}, {-1, 5}}).reflected() == P({{-3, 1}, {1, 5}}));
  }
  SUBCASE("algebra coefficients") {
    const auto spec = AlgebraSpec::dual_numbers();
    const AlgebraRing ring{spec};
    const AlgebraElement eps(spec, {0, 1});
    const auto p = AlgebraPoly::monomial(ring, eps, 1) + AlgebraPoly::one(ring);
    // (1 + eps z)^2 = 1 + 2 eps z
    CHECK(p * p == AlgebraPoly::one(ring) + AlgebraPoly::monomial(ring, eps * Scalar(2), 1));
    CHECK_THROWS_AS(p * AlgebraPoly::one(AlgebraRing{AlgebraSpec::point()}), SpecMismatch);
  }
  SUBCASE("truncated product") {
    const auto p = P({{0, 1}, {1, 1}, {2, 1}});
    CHECK(multiply_truncated(p, p, 2) == P({{0, 1}, {1, 2}, {2, 3}}));
  }
}

TEST_CASE("degrees and evaluation") {
  const auto p = P({{-1, 1}, {0, 1}, {1, 1}});
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 1);
  CHECK_THROWS(ScalarPoly().min_degree());
  CHECK(p.evaluate(2) == Scalar(7, 2));
  CHECK(p.evaluate(1) == 3);
  CHECK(ScalarPoly().evaluate(Scalar(5, 3)) == 0);
  CHECK_THROWS_AS(p.evaluate(0), DenominatorVanishes);
}

TEST_CASE("format_poly is canonical and ascending") {
  CHECK(format_poly(P({{1, 1}, {-1, 1}, {0, 1}})) == "z^-1 + 1 + z");
  CHECK(format_poly(P({{-1, -1}, {2, Scalar(-3, 2)}, {0, 4}})) == "-z^-1 + 4 - 3/2*z^2");
  CHECK(format_poly(ScalarPoly()) == "0");
  CHECK(format_poly(P({{0, -3}})) == "-3");
}
