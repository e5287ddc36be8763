#include "loclaurent/verification.hpp"

#include "loclaurent/examples.hpp"

#include <algorithm>
#include <sstream>

namespace loclaurent {

const char *to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::Pass:
    return "PASS";
  case CheckStatus::Fail:
    return "FAIL";
  case CheckStatus::Precondition:
    return "PRECONDITION";
  case CheckStatus::Skipped:
    return "SKIPPED";
  }
  return "?";
}

bool same_component(const FixedComponent &a, const FixedComponent &b) {
  if (a.phi != b.phi || !same_spec(a.spec, b.spec) || a.pushforward != b.pushforward ||
      !(a.line_class == b.line_class) || a.normal.size() != b.normal.size()) {
    return false;
  }
  auto by_weight = [](const FixedComponent &c) {
    auto normal = c.normal;
    std::sort(normal.begin(), normal.end(),
              [](const auto &x, const auto &y) { return x.weight < y.weight; });
    return normal;
  };
  const auto na = by_weight(a);
  const auto nb = by_weight(b);
  for (std::size_t i = 0; i < na.size(); ++i) {
    if (na[i].weight != nb[i].weight || na[i].rank != nb[i].rank ||
        na[i].exterior_powers.size() != nb[i].exterior_powers.size()) {
      return false;
    }
    for (std::size_t j = 0; j < na[i].exterior_powers.size(); ++j) {
      if (!(na[i].exterior_powers[j] == nb[i].exterior_powers[j])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<const FixedComponent *> positive_side(const ManifoldData &m) {
  std::vector<const FixedComponent *> out;
  for (const auto &c : m.components) {
    if (c.phi > 0) {
      out.push_back(&c);
    }
  }
  return out;
}

// Multiset equality of the phi > 0 components.
bool same_positive_side(const ManifoldData &a, const ManifoldData &b) {
  auto pa = positive_side(a);
  auto pb = positive_side(b);
  if (pa.size() != pb.size()) {
    return false;
  }
  std::vector<bool> used(pb.size(), false);
  for (const auto *x : pa) {
    bool matched = false;
    for (std::size_t i = 0; i < pb.size() && !matched; ++i) {
      if (!used[i] && same_component(*x, *pb[i])) {
        used[i] = matched = true;
      }
    }
    if (!matched) {
      return false;
    }
  }
  return true;
}

void require_valid(const ManifoldData &m, const std::string &what) {
  const auto report = validate_manifold(m);
  if (!report.ok()) {
    throw PreconditionViolated(what + " fails validation: " + report.issues.front().where +
                               ": " + report.issues.front().message);
  }
}

void settle(CheckReport &r) {
  const bool ok = std::all_of(r.equalities.begin(), r.equalities.end(),
                              [](const Equality &e) { return e.holds(); });
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
}

} // namespace

ValidationReport validate_cut(const CutTriple &t) {
  ValidationReport report;
  auto add = [&](const std::string &prefix, const ValidationReport &sub) {
    for (const auto &issue : sub.issues) {
      report.issues.push_back({prefix + issue.where, issue.message});
    }
  };
  add("original.", validate_manifold(t.original));
  add("cut.plus.", validate_manifold(t.plus_cut));
  if (t.minus_cut) {
    add("cut.minus.", validate_manifold(t.minus_cut.value()));
  }
  if (t.plus_cut.components.empty()) {
    return report;
  }
  if (t.plus_cut.phi_min() != 0) {
    report.issues.push_back({"cut.plus", "minimum moment value of M+ must be 0, got " +
                                             std::to_string(t.plus_cut.phi_min())});
  }
  if (!t.original.components.empty() && !same_positive_side(t.original, t.plus_cut)) {
    report.issues.push_back(
        {"cut.plus", "components with phi > 0 must coincide with those of the original space"});
  }
  if (t.minus_cut && !t.minus_cut->components.empty() && t.minus_cut->phi_max() != 0) {
    report.issues.push_back({"cut.minus", "maximum moment value of M- must be 0, got " +
                                              std::to_string(t.minus_cut->phi_max())});
  }
  return report;
}

Scalar positive_side_invariant(const ManifoldData &m) {
  Scalar total = 0;
  for (const auto *c : positive_side(m)) {
    total += contribution(*c, Direction::AtZero, 0).coeff(0);
  }
  return total;
}

CheckReport check_prop1(const ManifoldData &m, const ManifoldData *n,
                        const LocalizeOptions &options) {
  require_valid(m, "M");
  if (m.phi_max() == 0) {
    throw PreconditionViolated("0 is the maximum value of the moment map of M");
  }
  if (n) {
    require_valid(*n, "N");
    if (n->phi_max() == 0) {
      throw PreconditionViolated("0 is the maximum value of the moment map of N");
    }
  }

  CheckReport r{"prop1", CheckStatus::Pass, {}, {}};
  const Scalar full_m = invariant_part(localize(m, options));
  r.equalities.push_back({"Q(M)^S1", "positive-side constant term of M", full_m,
                          positive_side_invariant(m)});
  if (n) {
    const Scalar full_n = invariant_part(localize(*n, options));
    r.equalities.push_back({"Q(N)^S1", "positive-side constant term of N", full_n,
                            positive_side_invariant(*n)});
    if (same_positive_side(m, *n)) {
      r.equalities.push_back({"Q(M)^S1", "Q(N)^S1", full_m, full_n});
    } else {
      r.message = "phi > 0 data of M and N differ; only the internal checks apply";
    }
  }
  settle(r);
  return r;
}

CheckReport check_prop2(const ManifoldData &m, const LocalizeOptions &options) {
  require_valid(m, "M");
  if (m.phi_min() != 0) {
    throw PreconditionViolated("minimum of the moment map is " + std::to_string(m.phi_min()) +
                               ", not 0");
  }
  CheckReport r{"prop2", CheckStatus::Pass, {}, {}};
  Scalar pushed = 0;
  Scalar positive_at_infinity = 0;
  for (const auto &c : m.components) {
    if (c.phi == 0) {
      pushed += c.push(c.line_class);
    } else {
      positive_at_infinity += contribution(c, Direction::AtInfinity, 0).coeff(0);
    }
  }
  r.equalities.push_back(
      {"Q(M)^S1", "(q0)_! l0", invariant_part(localize(m, options)), pushed});
  r.equalities.push_back(
      {"phi > 0 constant term at infinity", "0", positive_at_infinity, Scalar(0)});
  settle(r);
  return r;
}

CheckReport check_reduction(const CutTriple &t, const LocalizeOptions &options) {
  const auto report = validate_cut(t);
  if (!report.ok()) {
    throw PreconditionViolated("cut triple: " + report.issues.front().where + ": " +
                               report.issues.front().message);
  }
  CheckReport r{"reduction", CheckStatus::Pass, {}, {}};
  const Scalar q_m = invariant_part(localize(t.original, options));
  const Scalar q_plus = invariant_part(localize(t.plus_cut, options));
  r.equalities.push_back({"Q(M)^S1", "Q(M+)^S1", q_m, q_plus});
  r.equalities.push_back({"Q(M+)^S1", "Q(M_red)", q_plus, t.reduced_quantization});
  if (!t.free_action) {
    r.message = "record marks the action on the zero level as not free";
  }
  settle(r);
  return r;
}

bool ExampleResult::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckReport &c) { return c.status == CheckStatus::Fail; });
}

ExampleResult run_example(const ExampleRecord &record, const LocalizeOptions &options) {
  ExampleResult result{record.name, {}};
  auto fail = [&](std::string check, std::string message) {
    result.checks.push_back({std::move(check), CheckStatus::Fail, {}, std::move(message)});
  };

  const auto validation = validate_manifold(record.data);
  if (!validation.ok()) {
    fail("validate", validation.to_string());
    return result;
  }
  result.checks.push_back({"validate", CheckStatus::Pass, {}, {}});

  EquivariantCharacter q;
  try {
    q = localize(record.data, options);
  } catch (const Error &e) {
    fail("localize", e.what());
    return result;
  }
  CheckReport loc{"localize", CheckStatus::Pass, {}, format_poly(q.poly)};
  if (record.expected_character && !(record.expected_character.value() == q.poly)) {
    loc.status = CheckStatus::Fail;
    loc.message = "expected " + format_poly(record.expected_character.value()) + ", got " +
                  format_poly(q.poly);
  }
  if (record.expected_invariant) {
    loc.equalities.push_back({"Q(M)^S1", "expected", invariant_part(q),
                              record.expected_invariant.value()});
    if (!loc.equalities.back().holds()) {
      loc.status = CheckStatus::Fail;
    }
  }
  result.checks.push_back(std::move(loc));

  auto run = [&](const char *name, auto &&fn) {
    try {
      result.checks.push_back(fn());
    } catch (const PreconditionViolated &e) {
      result.checks.push_back({name, CheckStatus::Skipped, {}, e.what()});
    } catch (const Error &e) {
      fail(name, e.what());
    }
  };
  run("prop1", [&] { return check_prop1(record.data, nullptr, options); });
  run("prop2", [&] { return check_prop2(record.data, options); });
  if (record.cut) {
    run("reduction", [&] { return check_reduction(record.cut.value(), options); });
  } else {
    result.checks.push_back({"reduction", CheckStatus::Skipped, {}, "no cut data"});
  }
  return result;
}

SuiteSummary run_example_suite(const std::vector<ExampleRecord> &records,
                               const LocalizeOptions &options) {
  SuiteSummary summary;
  if (records.empty()) {
    summary.warnings.push_back("example suite is empty; nothing was checked");
  }
  for (const auto &record : records) {
    summary.results.push_back(run_example(record, options));
  }
  std::sort(summary.results.begin(), summary.results.end(),
            [](const auto &a, const auto &b) { return a.name < b.name; });
  summary.failures = static_cast<std::size_t>(
      std::count_if(summary.results.begin(), summary.results.end(),
                    [](const ExampleResult &r) { return !r.passed(); }));
  return summary;
}

SuiteSummary run_example_suite() { return run_example_suite(bundled_examples()); }

std::string SuiteSummary::to_string() const {
  std::ostringstream out;
  for (const auto &w : warnings) {
    out << "warning: " << w << "\n";
  }
  for (const auto &r : results) {
    out << r.name << ":";
    for (const auto &c : r.checks) {
      out << " " << c.check << "=" << loclaurent::to_string(c.status);
    }
    out << "\n";
    for (const auto &c : r.checks) {
      if (c.status == CheckStatus::Fail) {
        out << "  " << c.check << ": " << c.message << "\n";
        for (const auto &e : c.equalities) {
          out << "    " << e.lhs_name << " = " << format_scalar(e.lhs) << ", " << e.rhs_name
              << " = " << format_scalar(e.rhs) << "\n";
        }
      }
    }
  }
  out << "examples: " << results.size() << ", failures: " << failures << "\n";
  return out.str();
}

} // namespace loclaurent
