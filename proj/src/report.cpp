#include "loclaurent/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace loclaurent {

namespace {

using ordered_json = nlohmann::ordered_json;

const char *yes_no(bool b) { return b ? "yes" : "no"; }

} // namespace

CharacterReport make_character_report(const EquivariantCharacter &q,
                                      std::optional<Scalar> eval_point) {
  CharacterReport r;
  r.character = q.poly;
  r.invariant = invariant_part(q);
  r.dimension = eval_character(q, 1);
  r.window_low = q.window_low;
  r.window_high = q.window_high;
  r.at_zero = q.at_zero;
  r.at_infinity = q.at_infinity;
  r.fraction_oracle = q.fraction_oracle;
  // localize throws on any disagreement, so reaching here means agreement
  r.agree = q.at_zero && q.at_infinity;
  if (eval_point) {
    r.eval_point = eval_point;
    r.eval_value = eval_character(q, eval_point.value());
  }
  return r;
}

std::string to_text(const CharacterReport &r) {
  std::ostringstream out;
  out << "character: " << format_poly(r.character) << "\n";
  out << "invariant_part: " << format_scalar(r.invariant) << "\n";
  out << "dimension: " << format_scalar(r.dimension) << "\n";
  out << "window: [" << r.window_low << ", " << r.window_high << "]\n";
  out << "paths: at_zero=" << yes_no(r.at_zero) << " at_infinity=" << yes_no(r.at_infinity)
      << " fraction_oracle=" << yes_no(r.fraction_oracle) << " agree=" << yes_no(r.agree)
      << "\n";
  if (r.eval_point) {
    out << "eval: z0=" << format_scalar(r.eval_point.value())
        << " value=" << format_scalar(r.eval_value.value()) << "\n";
  }
  return out.str();
}

std::string to_json(const CharacterReport &r) {
  ordered_json j;
  ordered_json terms = ordered_json::array();
  for (const auto &[d, c] : r.character.terms()) {
    terms.push_back(ordered_json::array({d, format_scalar(c)}));
  }
  j["character"] = std::move(terms);
  j["invariant_part"] = format_scalar(r.invariant);
  j["dimension"] = format_scalar(r.dimension);
  j["window"] = ordered_json::array({r.window_low, r.window_high});
  j["paths"] = {{"at_zero", r.at_zero},
                {"at_infinity", r.at_infinity},
                {"fraction_oracle", r.fraction_oracle},
                {"agree", r.agree}};
  if (r.eval_point) {
    j["eval"] = {{"z0", format_scalar(r.eval_point.value())},
                 {"value", format_scalar(r.eval_value.value())}};
  }
  return j.dump(2) + "\n";
}

CharacterReport character_report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text.begin(), text.end());
  CharacterReport r;
  for (const auto &term : j.at("character")) {
    r.character.add_term(term.at(0).get<Degree>(), parse_scalar(term.at(1).get<std::string>()));
  }
  r.invariant = parse_scalar(j.at("invariant_part").get<std::string>());
  r.dimension = parse_scalar(j.at("dimension").get<std::string>());
  r.window_low = j.at("window").at(0).get<Degree>();
  r.window_high = j.at("window").at(1).get<Degree>();
  const auto &paths = j.at("paths");
  r.at_zero = paths.at("at_zero").get<bool>();
  r.at_infinity = paths.at("at_infinity").get<bool>();
  r.fraction_oracle = paths.at("fraction_oracle").get<bool>();
  r.agree = paths.at("agree").get<bool>();
  if (j.contains("eval")) {
    r.eval_point = parse_scalar(j.at("eval").at("z0").get<std::string>());
    r.eval_value = parse_scalar(j.at("eval").at("value").get<std::string>());
  }
  return r;
}

bool VerifyReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckReport &c) {
    return c.status == CheckStatus::Fail || c.status == CheckStatus::Precondition;
  });
}

std::string to_text(const VerifyReport &r) {
  std::ostringstream out;
  for (const auto &c : r.checks) {
    out << "[" << c.check << "] " << to_string(c.status);
    if (!c.message.empty()) {
      out << " (" << c.message << ")";
    }
    out << "\n";
    for (const auto &e : c.equalities) {
      out << "  " << e.lhs_name << " = " << format_scalar(e.lhs) << "  "
          << (e.holds() ? "==" : "!=") << "  " << e.rhs_name << " = " << format_scalar(e.rhs)
          << "\n";
    }
  }
  out << "== summary ==\n";
  for (const auto &c : r.checks) {
    out << c.check << "=" << to_string(c.status) << "\n";
  }
  out << "overall=" << (r.failed() ? "FAIL" : "PASS") << "\n";
  return out.str();
}

std::string to_json(const VerifyReport &r) {
  ordered_json j;
  ordered_json checks = ordered_json::array();
  for (const auto &c : r.checks) {
    ordered_json cj;
    cj["check"] = c.check;
    cj["status"] = to_string(c.status);
    cj["message"] = c.message;
    ordered_json eqs = ordered_json::array();
    for (const auto &e : c.equalities) {
      eqs.push_back({{"lhs_name", e.lhs_name},
                     {"lhs", format_scalar(e.lhs)},
                     {"rhs_name", e.rhs_name},
                     {"rhs", format_scalar(e.rhs)},
                     {"holds", e.holds()}});
    }
    cj["equalities"] = std::move(eqs);
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["overall"] = r.failed() ? "FAIL" : "PASS";
  return j.dump(2) + "\n";
}

} // namespace loclaurent
