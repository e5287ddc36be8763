#include "loclaurent/cli.hpp"

#include "loclaurent/dataset.hpp"
#include "loclaurent/examples.hpp"
#include "loclaurent/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace loclaurent::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UsageError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ExampleRecord load(const std::string &path) { return parse_dataset(read_file(path)); }

std::int64_t resolve_margin(const std::optional<std::int64_t> &flag) {
  if (flag) {
    if (*flag < 0) {
      throw UsageError("--order must be nonnegative");
    }
    return *flag;
  }
  if (const char *env = std::getenv(kMarginEnv); env && *env) {
    char *end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (*end != '\0' || v < 0) {
      throw UsageError(std::string(kMarginEnv) + " must be a nonnegative integer, got '" + env +
                       "'");
    }
    return v;
  }
  return kDefaultOrderMargin;
}

int cmd_validate(const std::string &path, std::ostream &out) {
  const ExampleRecord record = load(path);
  ValidationReport report = validate_manifold(record.data);
  if (record.cut) {
    for (const auto &issue : validate_cut(*record.cut).issues) {
      if (issue.where.rfind("original.", 0) != 0) {
        report.issues.push_back(issue);
      }
    }
  }
  if (!report.ok()) {
    out << "INVALID\n" << report.to_string();
    return kDomainFailure;
  }
  out << "OK: " << record.data.components.size() << " fixed component"
      << (record.data.components.size() == 1 ? "" : "s")
      << (record.cut ? ", cut triple" : "") << "\n";
  return kOk;
}

int cmd_character(const std::string &path, const std::optional<std::int64_t> &order,
                  const std::optional<std::string> &eval, bool as_json, std::ostream &out,
                  std::ostream &err) {
  const ExampleRecord record = load(path);
  std::optional<Scalar> z0;
  if (eval) {
    try {
      z0 = parse_scalar(*eval);
    } catch (const std::invalid_argument &e) {
      throw UsageError(std::string("--eval: ") + e.what());
    }
  }
  const auto report = validate_manifold(record.data);
  if (!report.ok()) {
    err << "invalid dataset:\n" << report.to_string();
    return kDomainFailure;
  }
  LocalizeOptions options;
  options.margin = resolve_margin(order);
  try {
    const auto q = localize(record.data, options);
    const auto r = make_character_report(q, z0);
    out << (as_json ? to_json(r) : to_text(r));
  } catch (const InconsistentData &e) {
    err << "inconsistent data: " << e.what() << "\n";
    return kInconsistentData;
  } catch (const NotAUnit &e) {
    err << "not a unit: " << e.what() << "\n";
    return kNotAUnit;
  } catch (const DenominatorVanishes &e) {
    err << "denominator vanishes: " << e.what() << "\n";
    return kDenominatorVanishes;
  }
  return kOk;
}

struct VerifySelection {
  bool prop1 = false;
  bool prop2 = false;
  bool reduction = false;
  bool all = false;
};

int cmd_verify(const std::string &path, VerifySelection sel,
               const std::optional<std::string> &against,
               const std::optional<std::int64_t> &order, bool as_json, std::ostream &out,
               std::ostream &err) {
  const ExampleRecord record = load(path);
  std::optional<ExampleRecord> other;
  if (against) {
    other = load(*against);
  }
  if (!sel.prop1 && !sel.prop2 && !sel.reduction) {
    sel.all = true;
  }
  if (sel.all) {
    sel.prop1 = sel.prop2 = sel.reduction = true;
  }
  LocalizeOptions options;
  options.margin = resolve_margin(order);

  VerifyReport report;
  auto run = [&](const char *name, auto &&fn) {
    try {
      report.checks.push_back(fn());
    } catch (const PreconditionViolated &e) {
      report.checks.push_back(
          {name, sel.all ? CheckStatus::Skipped : CheckStatus::Precondition, {}, e.what()});
    } catch (const Error &e) {
      report.checks.push_back({name, CheckStatus::Fail, {}, e.what()});
    }
  };
  if (sel.prop1) {
    run("prop1", [&] {
      return check_prop1(record.data, other ? &other->data : nullptr, options);
    });
  }
  if (sel.prop2) {
    run("prop2", [&] { return check_prop2(record.data, options); });
  }
  if (sel.reduction) {
    run("reduction", [&]() -> CheckReport {
      if (!record.cut) {
        throw PreconditionViolated("dataset has no cut section");
      }
      return check_reduction(*record.cut, options);
    });
  }
  (void)err;
  out << (as_json ? to_json(report) : to_text(report));
  return report.failed() ? kDomainFailure : kOk;
}

int cmd_examples_list(std::ostream &out) {
  for (const auto &r : bundled_examples()) {
    out << r.name << "\t" << r.data.metadata << "\n";
  }
  return kOk;
}

int cmd_examples_emit(const std::string &name, const std::string &path, std::ostream &out,
                      std::ostream &err) {
  const auto record = find_example(name);
  if (!record) {
    err << "unknown example '" << name << "'; run 'examples list'\n";
    return kDomainFailure;
  }
  const std::string text = dataset_to_json(*record);
  if (path == "-") {
    out << text;
    return kOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) {
    err << "cannot write '" << path << "'\n";
    return kDomainFailure;
  }
  out << "wrote " << path << "\n";
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Equivariant characters of Hamiltonian circle spaces from fixed-point data",
               "loclaurent"};
  app.require_subcommand(1);

  std::string path;
  std::optional<std::int64_t> order;
  bool as_json = false;

  auto *validate = app.add_subcommand("validate", "Parse and validate a dataset file");
  validate->add_option("path", path, "Dataset file")->required();

  std::optional<std::string> eval;
  auto *character = app.add_subcommand("character", "Compute the equivariant character");
  character->add_option("path", path, "Dataset file")->required();
  character->add_option("--order", order,
                        "Truncation margin beyond the weight range (default 16, or $" +
                            std::string(kMarginEnv) + ")");
  character->add_option("--eval", eval, "Also evaluate at this rational z0, e.g. 3/2");
  character->add_flag("--json", as_json, "Emit the report as JSON");

  VerifySelection sel;
  std::optional<std::string> against;
  auto *verify = app.add_subcommand("verify", "Check the reduction statements on a dataset");
  verify->add_option("path", path, "Dataset file")->required();
  verify->add_flag("--prop1", sel.prop1, "Invariant part from the phi > 0 components");
  verify->add_flag("--prop2", sel.prop2, "Invariant part from the phi = 0 minimum");
  verify->add_flag("--reduction", sel.reduction, "Quantization commutes with reduction");
  verify->add_flag("--all", sel.all, "All checks whose hypotheses hold (default)");
  verify->add_option("--against", against, "Second dataset for the two-space prop1 check");
  verify->add_option("--order", order, "Truncation margin");
  verify->add_flag("--json", as_json, "Emit the report as JSON");

  auto *examples = app.add_subcommand("examples", "Bundled example datasets");
  examples->require_subcommand(1);
  examples->add_subcommand("list", "List bundled examples");
  std::string name;
  std::string emit_path;
  auto *emit = examples->add_subcommand("emit", "Write a bundled dataset to a file");
  emit->add_option("name", name, "Example name")->required();
  emit->add_option("path", emit_path, "Output file, or - for stdout")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    if (validate->parsed()) {
      return cmd_validate(path, out);
    }
    if (character->parsed()) {
      return cmd_character(path, order, eval, as_json, out, err);
    }
    if (verify->parsed()) {
      return cmd_verify(path, sel, against, order, as_json, out, err);
    }
    if (emit->parsed()) {
      return cmd_examples_emit(name, emit_path, out, err);
    }
    return cmd_examples_list(out);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

} // namespace loclaurent::cli
