#pragma once

#include "loclaurent/algebra.hpp"
#include "loclaurent/errors.hpp"
#include "loclaurent/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace loclaurent {

using Degree = std::int64_t;

/// Finite sum of c_n z^n over a coefficient ring, n of either sign.
/// Zero coefficients are never stored.
template <class Ring>
class LaurentPoly {
public:
  using Coeff = typename Ring::Element;
  using Terms = std::map<Degree, Coeff>;

  explicit LaurentPoly(Ring ring = Ring{}) : ring_(std::move(ring)) {}

  LaurentPoly(Ring ring, std::initializer_list<std::pair<const Degree, Coeff>> terms)
      : ring_(std::move(ring)) {
    for (const auto &[d, c] : terms) {
      add_term(d, c);
    }
  }

  static LaurentPoly monomial(Ring ring, Coeff coeff, Degree degree) {
    LaurentPoly p(std::move(ring));
    p.add_term(degree, coeff);
    return p;
  }

  static LaurentPoly constant(Ring ring, Coeff coeff) {
    return monomial(std::move(ring), std::move(coeff), 0);
  }

  static LaurentPoly one(Ring ring) {
    Coeff u = ring.one();
    return constant(std::move(ring), std::move(u));
  }

  const Ring &ring() const noexcept { return ring_; }
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Coeff coeff(Degree d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Lowest / highest degree with a nonzero coefficient. Throws on zero.
  Degree min_degree() const {
    require_nonzero();
    return terms_.begin()->first;
  }
  Degree max_degree() const {
    require_nonzero();
    return terms_.rbegin()->first;
  }

  /// Adds c z^d, pruning the entry if it cancels.
  void add_term(Degree d, const Coeff &c) {
    if (Ring::is_zero(c)) {
      return;
    }
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
      return;
    }
    it->second += c;
    if (Ring::is_zero(it->second)) {
      terms_.erase(it);
    }
  }

  void set_term(Degree d, const Coeff &c) {
    terms_.erase(d);
    add_term(d, c);
  }

  /// z^by * p
  LaurentPoly shifted(Degree by) const {
    LaurentPoly r(ring_);
    for (const auto &[d, c] : terms_) {
      r.terms_.emplace_hint(r.terms_.end(), d + by, c);
    }
    return r;
  }

  /// p(z^-1)
  LaurentPoly reflected() const {
    LaurentPoly r(ring_);
    for (const auto &[d, c] : terms_) {
      r.terms_.emplace(-d, c);
    }
    return r;
  }

  LaurentPoly scaled(const Coeff &c) const {
    LaurentPoly r(ring_);
    for (const auto &[d, a] : terms_) {
      r.add_term(d, Coeff(a * c));
    }
    return r;
  }

  LaurentPoly &operator+=(const LaurentPoly &rhs) {
    require_compatible(rhs);
    for (const auto &[d, c] : rhs.terms_) {
      add_term(d, c);
    }
    return *this;
  }

  LaurentPoly &operator-=(const LaurentPoly &rhs) {
    require_compatible(rhs);
    for (const auto &[d, c] : rhs.terms_) {
      add_term(d, Coeff(-c));
    }
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly &rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly &rhs) { return lhs -= rhs; }

  friend LaurentPoly operator*(const LaurentPoly &lhs, const LaurentPoly &rhs) {
    lhs.require_compatible(rhs);
    LaurentPoly r(lhs.ring_);
    for (const auto &[i, a] : lhs.terms_) {
      for (const auto &[j, b] : rhs.terms_) {
        r.add_term(i + j, Coeff(a * b));
      }
    }
    return r;
  }

  LaurentPoly &operator*=(const LaurentPoly &rhs) { return *this = *this * rhs; }

  /// lhs * rhs with every term above `max_degree` dropped.
  friend LaurentPoly multiply_truncated(const LaurentPoly &lhs, const LaurentPoly &rhs,
                                        Degree max_degree) {
    lhs.require_compatible(rhs);
    LaurentPoly r(lhs.ring_);
    if (lhs.is_zero() || rhs.is_zero()) {
      return r;
    }
    const Degree rhs_low = rhs.terms_.begin()->first;
    for (const auto &[i, a] : lhs.terms_) {
      if (i + rhs_low > max_degree) {
        break;
      }
      for (const auto &[j, b] : rhs.terms_) {
        if (i + j > max_degree) {
          break;
        }
        r.add_term(i + j, Coeff(a * b));
      }
    }
    return r;
  }

  friend bool operator==(const LaurentPoly &lhs, const LaurentPoly &rhs) {
    lhs.require_compatible(rhs);
    if (lhs.terms_.size() != rhs.terms_.size()) {
      return false;
    }
    auto it = rhs.terms_.begin();
    for (const auto &[d, c] : lhs.terms_) {
      if (d != it->first || !(c == it->second)) {
        return false;
      }
      ++it;
    }
    return true;
  }

  /// Substitutes z = z0 (nonzero rational).
  Coeff evaluate(const Scalar &z0) const {
    if (z0 == 0 && !terms_.empty() && terms_.begin()->first < 0) {
      throw DenominatorVanishes("negative powers of z evaluated at 0");
    }
    Coeff sum = ring_.zero();
    for (const auto &[d, c] : terms_) {
      sum += Coeff(c * pow(z0, d));
    }
    return sum;
  }

private:
  void require_nonzero() const {
    if (terms_.empty()) {
      throw std::domain_error("degree of the zero Laurent polynomial");
    }
  }
  void require_compatible(const LaurentPoly &other) const {
    if (!ring_.compatible(other.ring_)) {
      throw SpecMismatch("Laurent polynomials over different coefficient rings");
    }
  }

  Ring ring_;
  Terms terms_;
};

using ScalarPoly = LaurentPoly<ScalarRing>;
using AlgebraPoly = LaurentPoly<AlgebraRing>;

/// Human-readable polynomial in ascending degree, e.g. "z^-1 + 1 + 2*z^3".
std::string format_poly(const ScalarPoly &p);

/// Image of a polynomial under a linear map applied coefficientwise.
template <class Ring, class Fn>
ScalarPoly map_to_scalars(const LaurentPoly<Ring> &p, Fn &&fn) {
  ScalarPoly r;
  for (const auto &[d, c] : p.terms()) {
    r.add_term(d, fn(c));
  }
  return r;
}

} // namespace loclaurent
