#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace loclaurent {

/// Exact rational number. GMP keeps the denominator positive; every value
/// produced by this library is canonicalized (lowest terms).
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p/q" with q > 0, or just "p" when q == 1.
std::string format_scalar(const Scalar &value);

inline bool is_integer(const Scalar &value) { return value.get_den() == 1; }

/// Exact integer power; negative exponents require a nonzero base.
Scalar pow(const Scalar &base, std::int64_t exponent);

Scalar binomial(std::int64_t n, std::int64_t k);

} // namespace loclaurent
