#include "loclaurent/localization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace loclaurent {

NormalSummand NormalSummand::point(Weight weight, std::int64_t rank) {
  NormalSummand s{weight, rank, {}};
  for (std::int64_t j = 0; j <= rank; ++j) {
    s.exterior_powers.push_back(AlgebraElement::constant(AlgebraSpec::point(), binomial(rank, j)));
  }
  return s;
}

FixedComponent FixedComponent::point(std::string label, std::int64_t phi,
                                     std::vector<std::pair<Weight, std::int64_t>> weights) {
  FixedComponent c{std::move(label), phi, AlgebraSpec::point(),
                   AlgebraElement::one(AlgebraSpec::point()), {}, {Scalar(1)}};
  for (const auto &[w, n] : weights) {
    c.normal.push_back(NormalSummand::point(w, n));
  }
  return c;
}

bool FixedComponent::has_positive_weights() const {
  return std::any_of(normal.begin(), normal.end(), [](const auto &s) { return s.weight > 0; });
}

bool FixedComponent::has_negative_weights() const {
  return std::any_of(normal.begin(), normal.end(), [](const auto &s) { return s.weight < 0; });
}

bool FixedComponent::is_point_mode() const {
  return same_spec(spec, AlgebraSpec::point()) && pushforward.size() == 1 && pushforward[0] == 1;
}

Scalar FixedComponent::push(const AlgebraElement &x) const {
  if (!same_spec(x.spec(), spec)) {
    throw SpecMismatch("pushforward of a class from another algebra on component '" + label +
                       "'");
  }
  Scalar r = 0;
  for (std::size_t i = 0; i < pushforward.size(); ++i) {
    r += pushforward[i] * x[i];
  }
  return r;
}

std::int64_t ManifoldData::phi_min() const {
  if (components.empty()) {
    throw InconsistentData("manifold data has no fixed components");
  }
  return std::min_element(components.begin(), components.end(),
                          [](const auto &a, const auto &b) { return a.phi < b.phi; })
      ->phi;
}

std::int64_t ManifoldData::phi_max() const {
  if (components.empty()) {
    throw InconsistentData("manifold data has no fixed components");
  }
  return std::max_element(components.begin(), components.end(),
                          [](const auto &a, const auto &b) { return a.phi < b.phi; })
      ->phi;
}

bool ManifoldData::scalar_mode() const {
  return std::all_of(components.begin(), components.end(),
                     [](const auto &c) { return c.spec && c.spec->dimension() == 1; });
}

std::string ValidationReport::to_string() const {
  if (issues.empty()) {
    return "ok";
  }
  std::ostringstream out;
  for (const auto &issue : issues) {
    out << issue.where << ": " << issue.message << "\n";
  }
  return out.str();
}

ValidationReport validate_component(const FixedComponent &c, const std::string &where) {
  ValidationReport report;
  auto issue = [&](std::string at, std::string message) {
    report.issues.push_back({std::move(at), std::move(message)});
  };

  if (!c.spec) {
    issue(where, "missing coefficient algebra");
    return report;
  }
  if (auto bad = c.spec->validate()) {
    issue(where + ".algebra", bad->message);
    return report;
  }
  const std::size_t d = c.spec->dimension();
  if (!same_spec(c.line_class.spec(), c.spec)) {
    issue(where + ".line_class", "line class lives in a different algebra");
  }
  if (c.pushforward.size() != d) {
    issue(where + ".pushforward", "expected " + std::to_string(d) + " entries, got " +
                                      std::to_string(c.pushforward.size()));
  }
  const bool point_spec = same_spec(c.spec, AlgebraSpec::point());
  if (point_spec && !c.pushforward.empty() && c.pushforward != std::vector<Scalar>{Scalar(1)}) {
    issue(where + ".pushforward", "a point component must push forward by the identity");
  }

  std::set<Weight> seen;
  for (std::size_t i = 0; i < c.normal.size(); ++i) {
    const auto &s = c.normal[i];
    const std::string at = where + ".summands[" + std::to_string(i) + "]";
    if (s.weight == 0) {
      issue(at, "weight 0 cannot occur in the normal bundle");
    } else if (!seen.insert(s.weight).second) {
      issue(at, "weight " + std::to_string(s.weight) + " repeated; merge equal weights");
    }
    if (s.rank < 1) {
      issue(at, "rank must be positive");
      continue;
    }
    if (s.exterior_powers.size() != static_cast<std::size_t>(s.rank + 1)) {
      issue(at, "expected " + std::to_string(s.rank + 1) + " exterior powers, got " +
                    std::to_string(s.exterior_powers.size()));
      continue;
    }
    bool shapes_ok = true;
    for (const auto &e : s.exterior_powers) {
      if (!same_spec(e.spec(), c.spec)) {
        issue(at, "exterior power lives in a different algebra");
        shapes_ok = false;
        break;
      }
    }
    if (!shapes_ok) {
      continue;
    }
    if (!(s.exterior_powers.front() == AlgebraElement::one(c.spec))) {
      issue(at, "0th exterior power must be the unit");
    }
    try {
      (void)s.exterior_powers.back().inverse();
    } catch (const NotAUnit &) {
      issue(at, "top exterior power (determinant bundle) is not a unit");
    }
    if (point_spec) {
      for (std::int64_t j = 0; j <= s.rank; ++j) {
        if (s.exterior_powers[j][0] != binomial(s.rank, j)) {
          issue(at, "exterior power " + std::to_string(j) + " of a rank " +
                        std::to_string(s.rank) + " summand over a point must be " +
                        format_scalar(binomial(s.rank, j)));
        }
      }
    }
  }
  return report;
}

ValidationReport validate_manifold(const ManifoldData &m) {
  ValidationReport report;
  if (m.components.empty()) {
    report.issues.push_back({"components", "at least one fixed component is required"});
    return report;
  }
  const auto lo = m.phi_min();
  const auto hi = m.phi_max();
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    const auto &c = m.components[i];
    const std::string where = "components[" + std::to_string(i) + "] '" + c.label + "'";
    auto sub = validate_component(c, where);
    report.issues.insert(report.issues.end(), sub.issues.begin(), sub.issues.end());

    const bool at_min = c.phi == lo;
    const bool at_max = c.phi == hi;
    if (!c.has_negative_weights() && !at_min) {
      report.issues.push_back(
          {where, "no negative weights, so phi = " + std::to_string(c.phi) +
                      " must be the global minimum " + std::to_string(lo) +
                      " (a local minimum cannot occur)"});
    }
    if (c.has_negative_weights() && at_min) {
      report.issues.push_back({where, "negative weight at the global minimum phi = " +
                                          std::to_string(lo)});
    }
    if (!c.has_positive_weights() && !at_max) {
      report.issues.push_back(
          {where, "no positive weights, so phi = " + std::to_string(c.phi) +
                      " must be the global maximum " + std::to_string(hi) +
                      " (a local maximum cannot occur)"});
    }
    if (c.has_positive_weights() && at_max) {
      report.issues.push_back({where, "positive weight at the global maximum phi = " +
                                          std::to_string(hi)});
    }
  }
  return report;
}

namespace {

AlgebraPoly summand_factor(const AlgebraRing &ring, const NormalSummand &s) {
  AlgebraPoly factor(ring);
  for (std::int64_t j = 0; j <= s.rank; ++j) {
    const AlgebraElement term = j % 2 == 0 ? s.exterior_powers[j] : -s.exterior_powers[j];
    factor.add_term(-j * s.weight, term);
  }
  return factor;
}

} // namespace

AlgebraPoly lambda_total(const FixedComponent &c) {
  const AlgebraRing ring{c.spec};
  auto total = AlgebraPoly::one(ring);
  for (const auto &s : c.normal) {
    total *= summand_factor(ring, s);
  }
  return total;
}

namespace {

// Total degree of z in Q (positive weights) or P (negative weights).
std::int64_t weight_degree(const FixedComponent &c, bool positive) {
  std::int64_t total = 0;
  for (const auto &s : c.normal) {
    if ((s.weight > 0) == positive) {
      total += (positive ? s.weight : -s.weight) * s.rank;
    }
  }
  return total;
}

} // namespace

PQSplit split_pq(const FixedComponent &c, const AlgebraPoly &lt) {
  const AlgebraRing ring{c.spec};
  PQSplit split{AlgebraPoly::one(ring), AlgebraPoly::one(ring)};
  for (const auto &s : c.normal) {
    (s.weight < 0 ? split.p : split.q) *= summand_factor(ring, s);
  }
  if (!(split.p * split.q == lt)) {
    throw InconsistentData("P * Q does not reproduce the lambda class of '" + c.label + "'");
  }
  return split;
}

ScalarSeries contribution(const FixedComponent &c, Direction direction, Degree order) {
  const AlgebraRing ring{c.spec};
  const auto lt = lambda_total(c);
  const auto [p, q] = split_pq(c, lt);
  const bool at_zero = direction == Direction::AtZero;

  // The inverse is needed through order + phi; widen so both factor
  // inverses have nonempty windows, then truncate at the end.
  const Degree needed = order + c.phi;
  AlgebraSeries inverse = [&] {
    if (at_zero) {
      const Degree inner = std::max(needed, weight_degree(c, true));
      return invert_at_zero(p, inner) * invert_at_zero(q, inner);
    }
    const Degree inner = std::min(needed, -weight_degree(c, false));
    return invert_at_infinity(p, inner) * invert_at_infinity(q, inner);
  }();

  // (Lambda N)^-1 is 1 + O(z) at a maximum and O(z) elsewhere; mirrored at
  // infinity with the minimum.
  const bool vanishes = at_zero ? c.has_positive_weights() : c.has_negative_weights();
  const Degree edge = 0;
  for (const auto &[d, coeff] : inverse.terms()) {
    const bool outside = at_zero ? d < edge : d > edge;
    const bool at_edge = d == edge;
    if (outside || (vanishes && at_edge)) {
      throw InconsistentData("inverse lambda class of '" + c.label + "' has a term at z^" +
                             std::to_string(d) + " violating the " + to_string(direction) +
                             " vanishing law");
    }
  }
  if (!vanishes && !(inverse.coeff(edge) == AlgebraElement::one(c.spec))) {
    throw InconsistentData("inverse lambda class of '" + c.label +
                           "' does not start with the unit at an extremum");
  }

  auto line = embed(AlgebraPoly::constant(ring, c.line_class), direction, inverse.bound());
  auto local = (line * inverse).shifted(-c.phi);
  if (local.bound() != order) {
    local = local.truncated(order);
  }

  ScalarSeries out(ScalarRing{}, direction, local.low(), local.high());
  for (const auto &[d, coeff] : local.terms()) {
    out.add_term(d, c.push(coeff));
  }
  return out;
}

namespace {

// Ring isomorphism from a one-dimensional algebra to Q: x e0 -> x c_00^0.
Scalar to_scalar(const AlgebraElement &x) { return x[0] * x.spec()->constant(0, 0, 0); }

} // namespace

RationalFraction contribution_fraction(const FixedComponent &c) {
  if (!c.spec || c.spec->dimension() != 1) {
    throw std::invalid_argument("component '" + c.label +
                                "' is not over a one-dimensional algebra");
  }
  const auto lt = lambda_total(c);
  ScalarPoly den = map_to_scalars(lt, to_scalar);
  // push(x e0) = x q0 = to_scalar(x e0) * q0 / c_00^0
  const Scalar scale = c.pushforward.at(0) / c.spec->constant(0, 0, 0);
  ScalarPoly num = ScalarPoly::monomial(ScalarRing{}, Scalar(scale * to_scalar(c.line_class)),
                                        -c.phi);
  return RationalFraction(std::move(num), std::move(den));
}

Scalar contribution_value(const FixedComponent &c, const Scalar &z0) {
  if (z0 == 0) {
    throw DenominatorVanishes("cannot evaluate at z = 0");
  }
  const AlgebraElement lambda = lambda_total(c).evaluate(z0);
  AlgebraElement inverse = [&] {
    try {
      return lambda.inverse();
    } catch (const NotAUnit &) {
      throw DenominatorVanishes("lambda class of '" + c.label + "' is not invertible at z = " +
                                format_scalar(z0));
    }
  }();
  return Scalar(c.push(c.line_class * inverse) * pow(z0, -c.phi));
}

ScalarSeries direction_sum(const ManifoldData &m, Direction direction, std::int64_t margin) {
  const Degree low = -m.phi_max() - margin;
  const Degree high = -m.phi_min() + margin;
  const Degree order = direction == Direction::AtZero ? high : low;
  ScalarSeries sum(ScalarRing{}, direction, order, order);
  for (const auto &c : m.components) {
    sum += contribution(c, direction, order);
  }
  return sum;
}

EquivariantCharacter localize(const ManifoldData &m, const LocalizeOptions &options) {
  if (options.margin < 0) {
    throw std::invalid_argument("order margin must be nonnegative");
  }
  const Degree support_low = -m.phi_max();
  const Degree support_high = -m.phi_min();
  const ScalarSeries at_zero = direction_sum(m, Direction::AtZero, options.margin);
  const ScalarSeries at_inf = direction_sum(m, Direction::AtInfinity, options.margin);

  auto check_support = [&](const ScalarSeries &s) {
    for (const auto &[d, coeff] : s.terms()) {
      if (d < support_low || d > support_high) {
        throw InconsistentData(std::string("the ") + to_string(s.direction()) +
                               " expansion has coefficient " + format_scalar(coeff) +
                               " at z^" + std::to_string(d) + ", outside the weight range [" +
                               std::to_string(support_low) + ", " +
                               std::to_string(support_high) + "]");
      }
    }
  };
  check_support(at_zero);
  check_support(at_inf);

  EquivariantCharacter q;
  q.window_low = support_low - options.margin;
  q.window_high = support_high + options.margin;
  q.poly = at_zero.window_poly();
  if (!(q.poly == at_inf.window_poly())) {
    throw InconsistentData("expansions at zero (" + format_poly(q.poly) + ") and at infinity (" +
                           format_poly(at_inf.window_poly()) + ") disagree");
  }
  q.at_zero = true;
  q.at_infinity = true;

  if (options.fraction_cross_check && m.scalar_mode()) {
    std::vector<RationalFraction> fractions;
    for (const auto &c : m.components) {
      fractions.push_back(contribution_fraction(c));
    }
    ScalarPoly exact;
    try {
      exact = fraction_sum_to_poly(fractions);
    } catch (const NonPolynomialSum &e) {
      throw InconsistentData(std::string("fraction oracle: ") + e.what());
    }
    if (!(exact == q.poly)) {
      throw InconsistentData("fraction oracle gives " + format_poly(exact) +
                             " but the series give " + format_poly(q.poly));
    }
    q.fraction_oracle = true;
  }

  if (options.check_integrality) {
    for (const auto &[d, coeff] : q.poly.terms()) {
      if (!is_integer(coeff)) {
        throw InconsistentData("multiplicity " + format_scalar(coeff) + " of weight " +
                               std::to_string(d) + " is not an integer");
      }
    }
  }
  return q;
}

Scalar invariant_part(const EquivariantCharacter &q) { return q.poly.coeff(0); }

Scalar eval_character(const EquivariantCharacter &q, const Scalar &z0) {
  if (z0 == 0) {
    throw DenominatorVanishes("cannot evaluate a character at z = 0");
  }
  return q.poly.evaluate(z0);
}

Scalar eval_fractions(const ManifoldData &m, const Scalar &z0) {
  Scalar sum = 0;
  for (const auto &c : m.components) {
    sum += contribution_value(c, z0);
  }
  return sum;
}

} // namespace loclaurent
