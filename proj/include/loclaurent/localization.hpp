#pragma once

#include "loclaurent/fraction.hpp"
#include "loclaurent/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loclaurent {

using Weight = std::int64_t;

/// One isotypic summand of the (conjugated) normal bundle of a fixed
/// component: a bundle of the given rank on which the circle acts with a
/// nonzero weight. exterior_powers[j] is the class of its j-th exterior
/// power, so exterior_powers.size() == rank + 1.
struct NormalSummand {
  Weight weight = 0;
  std::int64_t rank = 0;
  std::vector<AlgebraElement> exterior_powers;

  /// Summand over a point: exterior powers are binomial coefficients.
  static NormalSummand point(Weight weight, std::int64_t rank);
};

/// A connected component of the fixed-point set together with everything
/// the localization formula needs from it.
///
/// `line_class` is the restriction of the prequantum line bundle with the
/// circle action forgotten; the action itself enters as z^-phi.
/// `pushforward` is the linear functional on the coefficient algebra that
/// integrates over the component, given on the basis.
struct FixedComponent {
  std::string label;
  std::int64_t phi = 0;
  SpecPtr spec;
  AlgebraElement line_class;
  std::vector<NormalSummand> normal;
  std::vector<Scalar> pushforward;

  /// Isolated fixed point with trivial line class and identity pushforward.
  static FixedComponent point(std::string label, std::int64_t phi,
                              std::vector<std::pair<Weight, std::int64_t>> weights_and_ranks);

  bool has_positive_weights() const;
  bool has_negative_weights() const;
  bool is_point_mode() const;

  /// Applies the pushforward functional.
  Scalar push(const AlgebraElement &x) const;
};

struct ManifoldData {
  std::vector<FixedComponent> components;
  std::string metadata;

  std::int64_t phi_min() const;
  std::int64_t phi_max() const;
  /// Every component lives over a one-dimensional algebra.
  bool scalar_mode() const;
};

struct ValidationIssue {
  std::string where; // e.g. "components[1].summands[0]"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const noexcept { return issues.empty(); }
  std::string to_string() const;
};

/// Checks algebra axioms, element shapes, nonzero and pairwise distinct
/// weights, exterior power shape, invertibility of top exterior powers, and
/// the extremum law: a component has no negative weights exactly when it
/// sits at the minimum of the moment map, and no positive weights exactly
/// when it sits at the maximum. Reports every violation.
ValidationReport validate_manifold(const ManifoldData &m);
ValidationReport validate_component(const FixedComponent &c, const std::string &where);

/// Lambda_{-1} of the normal bundle:
///   prod_k sum_j (-1)^j Lambda^j(N_k) z^{-j k}.
AlgebraPoly lambda_total(const FixedComponent &c);

struct PQSplit {
  AlgebraPoly p; ///< factors with negative weights; powers z^0..z^n
  AlgebraPoly q; ///< factors with positive weights; powers z^-m..z^0
};

/// Factors the lambda class of `c` into its nonnegative-degree and
/// nonpositive-degree parts. Throws InconsistentData if p * q differs from
/// `lt` (which must be lambda_total(c)).
PQSplit split_pq(const FixedComponent &c, const AlgebraPoly &lt);

/// l z^-phi (Lambda N)^-1 expanded in the given completion, exact through
/// `order` (a truncation bound in that direction), with the pushforward
/// applied coefficientwise.
///
/// Throws InconsistentData if the expansion violates the vanishing law
/// (AtZero: O(z^{1-phi}) when some weight is positive, else O(z^{-phi});
/// AtInfinity mirrored with negative weights).
ScalarSeries contribution(const FixedComponent &c, Direction direction, Degree order);

/// The same contribution as an exact fraction (scalar mode only).
RationalFraction contribution_fraction(const FixedComponent &c);

/// Value of the contribution at z0. Works in every mode: the lambda class
/// is evaluated in the coefficient algebra and inverted there.
Scalar contribution_value(const FixedComponent &c, const Scalar &z0);

/// Q(M) as a Laurent polynomial, z^n carrying the multiplicity of weight n.
struct EquivariantCharacter {
  ScalarPoly poly;
  bool at_zero = false;
  bool at_infinity = false;
  bool fraction_oracle = false;
  Degree window_low = 0;
  Degree window_high = 0;

  Scalar coeff(Degree d) const { return poly.coeff(d); }
};

inline constexpr std::int64_t kDefaultOrderMargin = 16;

struct LocalizeOptions {
  std::int64_t margin = kDefaultOrderMargin;
  bool check_integrality = true;
  /// Cross-check against fraction_sum_to_poly in scalar mode.
  bool fraction_cross_check = true;
};

/// Sums every component's contribution at zero and, independently, at
/// infinity over the window [-phi_max - margin, -phi_min + margin], checks
/// that both sums vanish outside [-phi_max, -phi_min] and agree on the
/// window, and returns the common polynomial. Throws InconsistentData on any
/// mismatch and NotAUnit from the inversions.
EquivariantCharacter localize(const ManifoldData &m, const LocalizeOptions &options = {});

/// Sum of contributions in one direction over the localize window.
ScalarSeries direction_sum(const ManifoldData &m, Direction direction, std::int64_t margin);

/// Multiplicity of the trivial representation: coefficient of z^0.
Scalar invariant_part(const EquivariantCharacter &q);

/// Exact value of the character at z0 != 0.
Scalar eval_character(const EquivariantCharacter &q, const Scalar &z0);

/// Sum over components of the evaluated contributions; the fraction route
/// for evaluation. Throws DenominatorVanishes.
Scalar eval_fractions(const ManifoldData &m, const Scalar &z0);

} // namespace loclaurent
