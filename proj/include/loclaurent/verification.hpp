#pragma once

#include "loclaurent/localization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loclaurent {

/// A space M, its positive symplectic cut M+ and the quantization of the
/// reduced space. M+ consists of the components of M with phi > 0 plus the
/// reduced space itself as a new fixed component at phi = 0.
struct CutTriple {
  ManifoldData original;
  ManifoldData plus_cut;
  /// Accepted and validated but not used by check_reduction.
  std::optional<ManifoldData> minus_cut;
  Scalar reduced_quantization = 0;
  std::string note;
  /// Freeness of the action on the zero level set is not visible in
  /// fixed-point data; records assert it.
  bool free_action = true;
};

/// Cut invariants: M+ has minimum 0, no component below 0, and its phi > 0
/// components coincide with those of M.
ValidationReport validate_cut(const CutTriple &t);

/// Content equality of two components (labels ignored).
bool same_component(const FixedComponent &a, const FixedComponent &b);

enum class CheckStatus { Pass, Fail, Precondition, Skipped };

const char *to_string(CheckStatus s);

struct Equality {
  std::string lhs_name;
  std::string rhs_name;
  Scalar lhs = 0;
  Scalar rhs = 0;

  bool holds() const { return lhs == rhs; }
};

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::vector<Equality> equalities;
  std::string message;
};

/// Constant term of the expansion at zero restricted to components with
/// phi > 0.
Scalar positive_side_invariant(const ManifoldData &m);

/// Invariant part = positive-side constant term at zero, for m and (when
/// given) n; if both share their phi > 0 data, their invariant parts agree.
/// Throws PreconditionViolated when 0 is the maximum of either moment map.
CheckReport check_prop1(const ManifoldData &m, const ManifoldData *n = nullptr,
                        const LocalizeOptions &options = {});

/// With minimum moment value 0: invariant part = pushforward of the line
/// class of the phi = 0 components. Throws PreconditionViolated otherwise.
CheckReport check_prop2(const ManifoldData &m, const LocalizeOptions &options = {});

/// invariant_part(Q(M)) = invariant_part(Q(M+)) = reduced quantization,
/// each equality reported separately. Throws PreconditionViolated when the
/// cut invariants fail.
CheckReport check_reduction(const CutTriple &t, const LocalizeOptions &options = {});

struct ExampleRecord {
  std::string name;
  ManifoldData data;
  std::optional<CutTriple> cut; ///< cut->original mirrors data
  std::optional<ScalarPoly> expected_character;
  std::optional<Scalar> expected_invariant;
  std::string oracle_note;
};

struct ExampleResult {
  std::string name;
  std::vector<CheckReport> checks;

  bool passed() const;
};

struct SuiteSummary {
  std::vector<ExampleResult> results; ///< sorted by example name
  std::vector<std::string> warnings;
  std::size_t failures = 0;

  bool passed() const noexcept { return failures == 0; }
  std::string to_string() const;
};

/// Runs validation, localization, expectation comparison and every
/// applicable proposition / reduction check on one record.
ExampleResult run_example(const ExampleRecord &record, const LocalizeOptions &options = {});

SuiteSummary run_example_suite(const std::vector<ExampleRecord> &records,
                               const LocalizeOptions &options = {});

/// The bundled set.
SuiteSummary run_example_suite();

} // namespace loclaurent
