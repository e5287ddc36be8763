#include "loclaurent/examples.hpp"

#include <stdexcept>

namespace loclaurent {

namespace {

ScalarPoly poly(std::initializer_list<std::pair<const Degree, Scalar>> terms) {
  return ScalarPoly(ScalarRing{}, terms);
}

AlgebraElement elem(const SpecPtr &spec, std::vector<Scalar> coords) {
  return AlgebraElement(spec, std::move(coords));
}

// Rank-one summand with first exterior power `line`.
NormalSummand line_summand(Weight weight, const AlgebraElement &line) {
  return NormalSummand{weight, 1, {AlgebraElement::one(line.spec()), line}};
}

} // namespace

ManifoldData sphere(std::int64_t a, std::int64_t b) {
  if (a + b <= 0) {
    throw std::invalid_argument("sphere needs a + b > 0");
  }
  return {{FixedComponent::point("south", -a, {{1, 1}}),
           FixedComponent::point("north", b, {{-1, 1}})},
          "rotation of S^2, moment values -" + std::to_string(a) + " and " + std::to_string(b)};
}

CutTriple sphere_cut(std::int64_t a, std::int64_t b) {
  if (a <= 0 || b <= 0) {
    throw std::invalid_argument("0 must be a regular value: need a, b > 0");
  }
  CutTriple t;
  t.original = sphere(a, b);
  t.plus_cut = {{FixedComponent::point("north", b, {{-1, 1}}),
                 FixedComponent::point("reduced", 0, {{1, 1}})},
                "positive cut of the sphere: a sphere with moment values 0 and " +
                    std::to_string(b)};
  t.reduced_quantization = 1;
  t.note = "reduced space is a point; its quantization is C";
  return t;
}

ManifoldData shifted_sphere() {
  return {{FixedComponent::point("south", 0, {{1, 1}}),
           FixedComponent::point("north", 2, {{-1, 1}})},
          "rotation of S^2 with moment values 0 and 2"};
}

ManifoldData point_space(const Scalar &line_class) {
  auto c = FixedComponent::point("pt", 0, {});
  c.line_class = AlgebraElement::constant(AlgebraSpec::point(), line_class);
  return {{c}, "a single point"};
}

ManifoldData cp2_triangle(std::int64_t d, std::int64_t shift) {
  if (d < 1) {
    throw std::invalid_argument("cp2_triangle needs d >= 1");
  }
  // Weights are <(1, 2), e> over the primitive edge vectors e at each vertex.
  return {{FixedComponent::point("v00", -shift, {{1, 1}, {2, 1}}),
           FixedComponent::point("vd0", d - shift, {{-1, 1}, {1, 1}}),
           FixedComponent::point("v0d", 2 * d - shift, {{-2, 1}, {-1, 1}})},
          "CP^2, triangle scale " + std::to_string(d) + ", subcircle (1,2), shift " +
              std::to_string(shift)};
}

CutTriple cp2_cut() {
  CutTriple t;
  t.original = cp2_triangle(3, 2);

  // Inertia of the reduced orbifold: untwisted Q[H]/(H^2) times the Z/2
  // twisted sector Q. The normal generator acts by -1 on the twisted sector.
  AlgebraSpec::Table table(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3, 0)));
  table[0][0][0] = 1;
  table[0][1][1] = 1;
  table[1][0][1] = 1;
  table[2][2][2] = 1;
  const SpecPtr spec = AlgebraSpec::make({"untwisted", "H", "twisted"}, table, {1, 0, 1});

  FixedComponent reduced{"reduced",
                         0,
                         spec,
                         elem(spec, {1, Scalar(3, 4), 1}),
                         {line_summand(1, elem(spec, {1, Scalar(1, 2), -1}))},
                         {1, 1, Scalar(1, 4)}};
  auto cp2 = cp2_triangle(3, 2);
  t.plus_cut = {{cp2.components[1], cp2.components[2], reduced},
                "positive cut of cp2_triangle(3, 2)"};
  t.reduced_quantization = 2;
  t.note = "lattice points (2,0) and (0,1) on the slice x + 2y = 2";
  t.free_action = false;
  return t;
}

ManifoldData dual_number_surface(std::int64_t k, std::int64_t a, std::int64_t b,
                                 std::int64_t shift) {
  if (b < 1 || a < 0 || k < 0) {
    throw std::invalid_argument("dual_number_surface needs b >= 1, a >= 0, k >= 0");
  }
  const SpecPtr spec = AlgebraSpec::dual_numbers("H");
  // Line classes 1 + (length of the edge) H; conjugated normal classes
  // 1 - (self-intersection) H.
  FixedComponent bottom{"bottom",
                        -shift,
                        spec,
                        elem(spec, {1, a + k * b}),
                        {line_summand(1, elem(spec, {1, -k}))},
                        {1, 1}};
  FixedComponent top{"top",
                     b - shift,
                     spec,
                     elem(spec, {1, a}),
                     {line_summand(-1, elem(spec, {1, k}))},
                     {1, 1}};
  return {{bottom, top},
          "trapezoid surface k=" + std::to_string(k) + " a=" + std::to_string(a) +
              " b=" + std::to_string(b) + " shift=" + std::to_string(shift)};
}

CutTriple dual_number_surface_cut(std::int64_t k, std::int64_t a, std::int64_t b,
                                  std::int64_t shift) {
  if (shift <= 0 || shift >= b) {
    throw std::invalid_argument("0 must be a regular value: need 0 < shift < b");
  }
  CutTriple t;
  t.original = dual_number_surface(k, a, b, shift);
  const auto &spec = t.original.components[0].spec;
  const std::int64_t length = a + k * (b - shift);
  FixedComponent reduced{"reduced",
                         0,
                         spec,
                         elem(spec, {1, length}),
                         {line_summand(1, elem(spec, {1, -k}))},
                         {1, 1}};
  t.plus_cut = {{t.original.components[1], reduced}, "positive cut of the trapezoid surface"};
  t.reduced_quantization = length + 1;
  t.note = "reduced space is the sphere over the row y = shift; " + std::to_string(length + 1) +
           " lattice points";
  return t;
}

std::vector<ExampleRecord> bundled_examples() {
  std::vector<ExampleRecord> out;

  {
    ExampleRecord r{"sphere(1,1)", sphere(1, 1), sphere_cut(1, 1), {}, 1, {}};
    r.expected_character = poly({{-1, 1}, {0, 1}, {1, 1}});
    r.oracle_note = "fraction z^2/(z-1) - 1/(z(z-1)) = z + 1 + 1/z; three lattice points on "
                    "[-1, 1]";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"sphere(3,1)", sphere(3, 1), std::nullopt, {}, 1, {}};
    r.expected_character = poly({{-1, 1}, {0, 1}, {1, 1}, {2, 1}, {3, 1}});
    r.oracle_note = "lattice points of [-1, 3]; same phi > 0 data as sphere(1,1)";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"sphere(2,2)", sphere(2, 2), sphere_cut(2, 2), {}, 1, {}};
    r.expected_character = poly({{-2, 1}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}});
    r.oracle_note = "degree-4 bundle; lattice points of [-2, 2]";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"shifted-sphere", shifted_sphere(), std::nullopt, {}, 1, {}};
    r.expected_character = poly({{-2, 1}, {-1, 1}, {0, 1}});
    r.oracle_note = "fraction 1/(1-1/z) + z^-2/(1-z) = 1 + 1/z + 1/z^2";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"point-space", point_space(), std::nullopt, {}, 1, {}};
    r.expected_character = poly({{0, 1}});
    r.oracle_note = "a point: the only term is the line class";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"cp2-triangle", cp2_triangle(3, 2), cp2_cut(), {}, 2, {}};
    r.expected_character = poly({{-4, 1}, {-3, 1}, {-2, 2}, {-1, 2}, {0, 2}, {1, 1}, {2, 1}});
    r.oracle_note = "lattice points of the scale-3 triangle sliced by x + 2y; the 0-slice "
                    "x + 2y = 2 holds (2,0) and (0,1)";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"dual-number-synthetic", dual_number_surface(1, 1, 2, 1),
                    dual_number_surface_cut(1, 1, 2, 1), {}, 3, {}};
    r.expected_character = poly({{-1, 2}, {0, 3}, {1, 4}});
    r.oracle_note = "series oracle in Q[H]/(H^2): rows of the trapezoid hold 4, 3, 2 lattice "
                    "points";
    out.push_back(std::move(r));
  }
  {
    ExampleRecord r{"dual-number-min0", dual_number_surface(1, 1, 2, 0), std::nullopt, {}, 4,
                    {}};
    r.expected_character = poly({{-2, 2}, {-1, 3}, {0, 4}});
    r.oracle_note = "series oracle in Q[H]/(H^2); minimum at 0, so the invariant part is "
                    "q(l0) = 1 + 3";
    out.push_back(std::move(r));
  }
  return out;
}

std::optional<ExampleRecord> find_example(const std::string &name) {
  for (auto &r : bundled_examples()) {
    if (r.name == name) {
      return r;
    }
  }
  return std::nullopt;
}

} // namespace loclaurent
