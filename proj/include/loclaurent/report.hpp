#pragma once

#include "loclaurent/localization.hpp"
#include "loclaurent/verification.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loclaurent {

struct CharacterReport {
  ScalarPoly character;
  Scalar invariant = 0;
  Scalar dimension = 0; ///< value at z = 1
  Degree window_low = 0;
  Degree window_high = 0;
  bool at_zero = false;
  bool at_infinity = false;
  bool fraction_oracle = false;
  bool agree = false;
  std::optional<Scalar> eval_point;
  std::optional<Scalar> eval_value;

  friend bool operator==(const CharacterReport &, const CharacterReport &) = default;
};

CharacterReport make_character_report(const EquivariantCharacter &q,
                                      std::optional<Scalar> eval_point = std::nullopt);

/// One "key: value" line per field, in a fixed order.
std::string to_text(const CharacterReport &r);

/// The same fields as JSON; from_json(to_json(r)) == r.
std::string to_json(const CharacterReport &r);
CharacterReport character_report_from_json(std::string_view text);

/// A set of verification outcomes plus a machine-readable summary block.
struct VerifyReport {
  std::vector<CheckReport> checks;

  /// FAIL anywhere, or PRECONDITION on an explicitly requested check.
  bool failed() const;
};

std::string to_text(const VerifyReport &r);
std::string to_json(const VerifyReport &r);

} // namespace loclaurent
