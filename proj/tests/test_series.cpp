#include "loclaurent/series.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <chrono>

using namespace loclaurent;
using loclaurent::testing::long_division_inverse;
using loclaurent::testing::random_scalar;
using loclaurent::testing::random_unit;

namespace {

ScalarPoly P(std::initializer_list<std::pair<const Degree, Scalar>> terms) {
  return ScalarPoly(ScalarRing{}, terms);
}

template <class Ring>
std::map<Degree, typename Ring::Element> terms_of(const TruncatedSeries<Ring> &s) {
  return {s.terms().begin(), s.terms().end()};
}

// p * s restricted to the window of s where the product is exact.
template <class Ring>
TruncatedSeries<Ring> times(const LaurentPoly<Ring> &p, const TruncatedSeries<Ring> &s) {
  const Degree order = s.direction() == Direction::AtZero ? std::max(s.high(), p.max_degree())
                                                          : std::min(s.low(), p.min_degree());
  return embed(p, s.direction(), order) * s;
}

} // namespace

TEST_CASE("embed") {
  const auto p = P({{-1, 1}, {0, 1}});
  SUBCASE("at zero") {
    const auto s = embed(p, Direction::AtZero, 3);
    CHECK(s.low() == -1);
    CHECK(s.high() == 3);
    CHECK(s.coeff(-1) == 1);
    CHECK(s.coeff(0) == 1);
    for (Degree d = 1; d <= 3; ++d) {
      CHECK(s.coeff(d) == 0);
    }
    CHECK(s.coeff(-100) == 0);
    CHECK_THROWS_AS(s.coeff(4), WindowError);
  }
  SUBCASE("at infinity") {
    const auto s = embed(p, Direction::AtInfinity, -3);
    CHECK(s.low() == -3);
    CHECK(s.high() == 0);
    CHECK(s.coeff(-1) == 1);
    CHECK(s.coeff(-3) == 0);
    CHECK(s.coeff(50) == 0);
    CHECK_THROWS_AS(s.coeff(-4), WindowError);
  }
  SUBCASE("zero polynomial") {
    const auto s = embed(ScalarPoly(), Direction::AtZero, 2);
    CHECK(s.terms().empty());
    CHECK(s.coeff(2) == 0);
  }
  SUBCASE("window too small") {
    CHECK_THROWS_AS(embed(P({{5, 1}}), Direction::AtZero, 4), WindowError);
    CHECK_THROWS_AS(embed(P({{-5, 1}}), Direction::AtInfinity, -4), WindowError);
  }
  SUBCASE("left inverse on polynomials inside the window") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> deg(-8, 8);
    for (int trial = 0; trial < 100; ++trial) {
      ScalarPoly q;
      for (int i = 0; i < 5; ++i) {
        q.add_term(deg(rng), random_scalar(rng));
      }
      CHECK(embed(q, Direction::AtZero, 8).window_poly() == q);
      CHECK(embed(q, Direction::AtInfinity, -8).window_poly() == q);
    }
  }
}

TEST_CASE("series_arith") {
  SUBCASE("geometric series times (1 - z) telescopes") {
    auto geometric = embed(P({{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}), Direction::AtZero, 5);
    const auto product = geometric * embed(P({{0, 1}, {1, -1}}), Direction::AtZero, 5);
    CHECK(product.high() == 5);
    CHECK(product.coeff(0) == 1);
    for (Degree d = 1; d <= 5; ++d) {
      CHECK(product.coeff(d) == 0);
    }
  }
  SUBCASE("adding zero") {
    const auto s = invert_at_zero(P({{0, 1}, {1, -2}}), 6);
    CHECK(s + embed(ScalarPoly(), Direction::AtZero, 6) == s);
  }
  SUBCASE("z^-1 * z = 1") {
    const auto r = embed(P({{-1, 1}}), Direction::AtZero, 4) * embed(P({{1, 1}}), Direction::AtZero, 4);
    CHECK(r.window_poly() == P({{0, 1}}));
  }
  SUBCASE("validity bound of a product") {
    // exact through min(Ha + val(b), Hb + val(a))
    const auto a = invert_at_zero(P({{0, 1}, {1, -1}}), 10); // val 0, high 10
    const auto b = invert_at_zero(P({{-2, 1}, {0, 1}}), 7);  // val 2, high 7
    CHECK((a * b).high() == 7);
  }
  SUBCASE("direction mismatch") {
    const auto a = embed(P({{0, 1}}), Direction::AtZero, 2);
    const auto b = embed(P({{0, 1}}), Direction::AtInfinity, -2);
    CHECK_THROWS_AS(a + b, WindowError);
    CHECK_THROWS_AS(a * b, WindowError);
  }
  SUBCASE("empty window is rejected") {
    CHECK_THROWS_AS(ScalarSeries(ScalarRing{}, Direction::AtZero, 3, 2), WindowError);
  }
}

TEST_CASE("invert_at_zero") {
  SUBCASE("1 - z") {
    const auto s = invert_at_zero(P({{0, 1}, {1, -1}}), 3);
    CHECK(s.window_poly() == P({{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    CHECK(s.low() == 0);
  }
  SUBCASE("1 - 1/z") {
    const auto p = P({{0, 1}, {-1, -1}});
    const auto s = invert_at_zero(p, 3);
    CHECK(s.window_poly() == P({{1, -1}, {2, -1}, {3, -1}}));
    CHECK(s.low() == 1);
    const auto check = times(p, s);
    CHECK(check.window_poly() == P({{0, 1}}));
    // exact through min(3 + val(s), 3 + val(p)) = 2
    CHECK(check.high() == 2);
  }
  SUBCASE("dual-number coefficients") {
    const auto spec = AlgebraSpec::dual_numbers();
    const AlgebraRing ring{spec};
    AlgebraPoly p(ring);
    p.add_term(0, AlgebraElement(spec, {1, 1}));
    p.add_term(1, AlgebraElement(spec, {-1, 0}));
    const auto s = invert_at_zero(p, 2);
    CHECK(s.coeff(0) == AlgebraElement(spec, {1, -1}));
    CHECK(s.coeff(1) == AlgebraElement(spec, {1, -2}));
    CHECK(s.coeff(2) == AlgebraElement(spec, {1, -3}));
    const auto check = times(p, s);
    CHECK(check.coeff(0) == AlgebraElement::one(spec));
    CHECK(check.coeff(1).is_zero());
    CHECK(check.coeff(2).is_zero());
  }
  SUBCASE("non-unit lowest coefficient") {
    const auto spec = AlgebraSpec::dual_numbers();
    AlgebraPoly p(AlgebraRing{spec});
    p.add_term(-1, AlgebraElement(spec, {0, 1}));
    p.add_term(0, AlgebraElement(spec, {1, 0}));
    CHECK_THROWS_AS(invert_at_zero(p, 5), NotAUnit);
    CHECK_THROWS_AS(invert_at_zero(ScalarPoly(), 5), NotAUnit);
  }
  SUBCASE("order below the leading degree") {
    const auto s = invert_at_zero(P({{-3, 1}, {-2, 1}}), 1); // inverse starts at z^3
    CHECK(s.terms().empty());
    CHECK(s.high() == 1);
  }
}

TEST_CASE("invert_at_infinity") {
  SUBCASE("1 - 1/z") {
    const auto s = invert_at_infinity(P({{0, 1}, {-1, -1}}), -3);
    CHECK(s.window_poly() == P({{0, 1}, {-1, 1}, {-2, 1}, {-3, 1}}));
  }
  SUBCASE("1 - z") {
    const auto p = P({{0, 1}, {1, -1}});
    const auto s = invert_at_infinity(p, -3);
    CHECK(s.window_poly() == P({{-1, -1}, {-2, -1}, {-3, -1}}));
    CHECK(s.high() == -1);
    CHECK(times(p, s).window_poly() == P({{0, 1}}));
  }
  SUBCASE("constant unit") {
    const auto s = invert_at_infinity(P({{0, Scalar(-4, 3)}}), -5);
    CHECK(s.window_poly() == P({{0, Scalar(-3, 4)}}));
  }
}

namespace {

template <class Ring, class Gen>
LaurentPoly<Ring> random_poly(std::mt19937_64 &rng, const Ring &ring, Gen &&coefficient,
                              bool unit_at_bottom) {
  std::uniform_int_distribution<int> deg(-8, 8);
  std::uniform_int_distribution<int> count(1, 6);
  LaurentPoly<Ring> p(ring);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    p.add_term(deg(rng), coefficient(false));
  }
  const Degree extreme = p.is_zero() ? deg(rng) : (unit_at_bottom ? p.min_degree() : p.max_degree());
  p.set_term(extreme, coefficient(true));
  return p;
}

template <class Ring>
void check_inverse_property(const LaurentPoly<Ring> &p, Degree order) {
  const auto one = p.ring().one();
  const auto s = invert_at_zero(p, order);
  // p * p^-1 is exact through `order` once the inverse is known past order - val(p)
  const auto wide = invert_at_zero(p, order - p.min_degree());
  const Degree v = p.min_degree();
  const auto product =
      embed(p, Direction::AtZero, std::max(order, p.max_degree()) + (v > 0 ? v : -v)) * wide;
  REQUIRE(product.high() >= order);
  for (const auto &[d, c] : product.terms()) {
    if (d <= order) {
      CHECK((d == 0 ? c == one : Ring::is_zero(c)));
    }
  }
  CHECK(product.coeff(0) == one);
  // leading term law
  CHECK(s.low() == -p.min_degree());
  CHECK(s.coeff(-p.min_degree()) == Ring::inverse(p.coeff(p.min_degree())));
  // independent long-division oracle
  CHECK(terms_of(s) == long_division_inverse(p, order));
}

} // namespace

TEST_CASE("inversion soundness over random polynomials") {
  std::mt19937_64 rng(1015);
  const auto start = std::chrono::steady_clock::now();
  int cases = 0;

  for (int trial = 0; trial < 120; ++trial, ++cases) {
    auto gen = [&](bool unit) { return random_scalar(rng, unit); };
    const auto p = random_poly(rng, ScalarRing{}, gen, true);
    check_inverse_property(p, 30);
    // mirror at infinity
    const auto q = random_poly(rng, ScalarRing{}, gen, false);
    const Degree top = q.max_degree();
    const auto s = invert_at_infinity(q, -30);
    const auto wide = invert_at_infinity(q, -30 - top);
    const auto product =
        embed(q, Direction::AtInfinity, std::min<Degree>(-30, q.min_degree()) - (top > 0 ? top : -top)) *
        wide;
    for (Degree d = -30; d <= product.high(); ++d) {
      CHECK(product.coeff(d) == (d == 0 ? 1 : 0));
    }
    CHECK(s.high() == -q.max_degree());
  }
  const auto spec = AlgebraSpec::dual_numbers();
  for (int trial = 0; trial < 100; ++trial, ++cases) {
    auto gen = [&](bool unit) {
      return unit ? random_unit(rng, spec) : testing::random_element(rng, spec);
    };
    check_inverse_property(random_poly(rng, AlgebraRing{spec}, gen, true), 30);
  }
  CHECK(cases >= 200);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  CHECK(std::chrono::duration<double>(elapsed).count() < 5.0);
}

TEST_CASE("reflection swaps the two completions") {
  const auto p = P({{-2, 3}, {0, 1}, {1, -1}});
  const auto at_inf = invert_at_infinity(p, -12);
  const auto mirrored = invert_at_zero(p.reflected(), 12).reflected();
  CHECK(at_inf == mirrored);
}
