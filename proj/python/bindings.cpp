#include "loclaurent/cli.hpp"
#include "loclaurent/dataset.hpp"
#include "loclaurent/examples.hpp"
#include "loclaurent/report.hpp"
#include "loclaurent/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

namespace py = pybind11;
using namespace loclaurent;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python layer turns them
// into fractions.Fraction.
using Terms = std::map<Degree, std::string>;

ScalarPoly poly_from(const Terms &terms) {
  ScalarPoly p;
  for (const auto &[d, c] : terms) {
    p.add_term(d, parse_scalar(c));
  }
  return p;
}

py::dict series_to_dict(const ScalarSeries &s) {
  Terms terms;
  for (const auto &[d, c] : s.terms()) {
    terms.emplace(d, format_scalar(c));
  }
  py::dict out;
  out["terms"] = terms;
  out["low"] = s.low();
  out["high"] = s.high();
  out["direction"] = to_string(s.direction());
  return out;
}

LocalizeOptions options_for(std::int64_t margin) {
  if (margin < 0) {
    throw py::value_error("margin must be nonnegative");
  }
  LocalizeOptions o;
  o.margin = margin;
  return o;
}

std::vector<std::string> validate(const std::string &text) {
  std::vector<std::string> issues;
  for (const auto &issue : validate_manifold(parse_dataset(text).data).issues) {
    issues.push_back(issue.where + ": " + issue.message);
  }
  return issues;
}

std::string character(const std::string &text, std::int64_t margin,
                      const std::optional<std::string> &z0) {
  const auto record = parse_dataset(text);
  std::optional<Scalar> point;
  if (z0) {
    point = parse_scalar(*z0);
  }
  return to_json(make_character_report(localize(record.data, options_for(margin)), point));
}

std::string verify(const std::string &text, const std::optional<std::string> &against,
                   std::int64_t margin) {
  const auto record = parse_dataset(text);
  std::optional<ExampleRecord> other;
  if (against) {
    other = parse_dataset(*against);
  }
  const auto options = options_for(margin);
  VerifyReport report;
  auto run = [&](const char *name, auto &&fn) {
    try {
      report.checks.push_back(fn());
    } catch (const PreconditionViolated &e) {
      report.checks.push_back({name, CheckStatus::Skipped, {}, e.what()});
    }
  };
  run("prop1", [&] { return check_prop1(record.data, other ? &other->data : nullptr, options); });
  run("prop2", [&] { return check_prop2(record.data, options); });
  run("reduction", [&]() -> CheckReport {
    if (!record.cut) {
      throw PreconditionViolated("dataset has no cut section");
    }
    return check_reduction(*record.cut, options);
  });
  return to_json(report);
}

std::string evaluate(const std::string &text, const std::string &z0) {
  const auto q = localize(parse_dataset(text).data);
  return format_scalar(eval_character(q, parse_scalar(z0)));
}

std::string emit_example(const std::string &name) {
  const auto record = find_example(name);
  if (!record) {
    throw py::key_error("no bundled example named '" + name + "'");
  }
  return dataset_to_json(*record);
}

py::tuple run_cli(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact K-theoretic localization for circle actions";
  m.attr("schema_version") = kSchemaVersion;
  m.attr("default_margin") = kDefaultOrderMargin;

  auto base = py::register_exception<Error>(m, "LoclaurentError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NotAUnit>(m, "NotAUnit", base.ptr());
  py::register_exception<WindowError>(m, "WindowError", base.ptr());
  py::register_exception<NonPolynomialSum>(m, "NonPolynomialSum", base.ptr());
  py::register_exception<InconsistentData>(m, "InconsistentData", base.ptr());
  py::register_exception<DenominatorVanishes>(m, "DenominatorVanishes", base.ptr());
  py::register_exception<PreconditionViolated>(m, "PreconditionViolated", base.ptr());

  m.def(
      "invert_at_zero",
      [](const Terms &p, Degree order) { return series_to_dict(invert_at_zero(poly_from(p), order)); },
      py::arg("terms"), py::arg("order"),
      "Inverse of a Laurent polynomial as a series in z, exact through z^order");
  m.def(
      "invert_at_infinity",
      [](const Terms &p, Degree order) {
        return series_to_dict(invert_at_infinity(poly_from(p), order));
      },
      py::arg("terms"), py::arg("order"),
      "Inverse of a Laurent polynomial as a series in 1/z, exact down to z^order");
  m.def("validate", &validate, py::arg("text"),
        "Validation issues of a dataset, empty when it is well formed");
  m.def("character", &character, py::arg("text"), py::arg("margin") = kDefaultOrderMargin,
        py::arg("z0") = py::none(), "Character report of a dataset as JSON");
  m.def("verify", &verify, py::arg("text"), py::arg("against") = py::none(),
        py::arg("margin") = kDefaultOrderMargin, "Verification report of a dataset as JSON");
  m.def("evaluate", &evaluate, py::arg("text"), py::arg("z0"), "Character value at z0");
  m.def("example_names", [] {
    std::vector<std::string> names;
    for (const auto &r : bundled_examples()) {
      names.push_back(r.name);
    }
    return names;
  });
  m.def("emit_example", &emit_example, py::arg("name"), "Dataset text of a bundled example");
  m.def("run_cli", &run_cli, py::arg("args"), "Runs the command line, returning (code, out, err)");
}
