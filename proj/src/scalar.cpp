#include "loclaurent/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace loclaurent {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

} // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') {
    n.erase(0, 1);
  }
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string format_scalar(const Scalar &value) {
  Scalar v = value;
  v.canonicalize();
  if (v.get_den() == 1) {
    return v.get_num().get_str();
  }
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scalar pow(const Scalar &base, std::int64_t exponent) {
  if (exponent < 0) {
    if (base == 0) {
      throw std::domain_error("zero to a negative power");
    }
    return pow(Scalar(1) / base, -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Scalar r(num, den);
  r.canonicalize();
  return r;
}

Scalar binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) {
    return 0;
  }
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Scalar(r);
}

} // namespace loclaurent
