#include "loclaurent/laurent.hpp"

namespace loclaurent {

std::string format_poly(const ScalarPoly &p) {
  if (p.is_zero()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto &[d, c] : p.terms()) {
    const bool negative = c < 0;
    const Scalar magnitude = abs(c);
    std::string term;
    if (d == 0) {
      term = format_scalar(magnitude);
    } else {
      const std::string power = d == 1 ? "z" : "z^" + std::to_string(d);
      term = magnitude == 1 ? power : format_scalar(magnitude) + "*" + power;
    }
    if (first) {
      out = (negative ? "-" : "") + term;
      first = false;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out;
}

} // namespace loclaurent
