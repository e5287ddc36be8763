#pragma once

#include "loclaurent/laurent.hpp"

#include <algorithm>
#include <string>

namespace loclaurent {

/// Which completion of R[z, 1/z] a series lives in.
///   AtZero:     finitely many negative powers, infinitely many positive ones.
///   AtInfinity: the mirror image.
enum class Direction { AtZero, AtInfinity };

inline const char *to_string(Direction d) {
  return d == Direction::AtZero ? "at-zero" : "at-infinity";
}

/// A formal Laurent series known exactly on a finite window [low, high].
///
/// AtZero: every coefficient below `low` is zero and every coefficient up to
/// `high` is exact; beyond `high` nothing is known. AtInfinity swaps the
/// roles: zero above `high`, exact down to `low`.
template <class Ring>
class TruncatedSeries {
public:
  using Coeff = typename Ring::Element;
  using Terms = std::map<Degree, Coeff>;

  TruncatedSeries(Ring ring, Direction direction, Degree low, Degree high)
      : ring_(std::move(ring)), direction_(direction), low_(low), high_(high) {
    if (high_ < low_) {
      throw WindowError("series window [" + std::to_string(low) + ", " + std::to_string(high) +
                        "] is empty");
    }
  }

  const Ring &ring() const noexcept { return ring_; }
  Direction direction() const noexcept { return direction_; }
  Degree low() const noexcept { return low_; }
  Degree high() const noexcept { return high_; }
  const Terms &terms() const noexcept { return terms_; }

  /// Truncation bound: last exact degree (AtZero) or first (AtInfinity).
  Degree bound() const noexcept { return direction_ == Direction::AtZero ? high_ : low_; }

  bool known(Degree d) const noexcept {
    return direction_ == Direction::AtZero ? d <= high_ : d >= low_;
  }

  Coeff coeff(Degree d) const {
    if (!known(d)) {
      throw WindowError("coefficient of z^" + std::to_string(d) + " lies beyond the " +
                        to_string(direction_) + " truncation bound " +
                        std::to_string(bound()));
    }
    auto it = terms_.find(d);
    return it == terms_.end() ? ring_.zero() : it->second;
  }

  /// Lowest nonzero degree; high + 1 when nothing inside the window is
  /// nonzero (AtZero only).
  Degree valuation() const noexcept {
    return terms_.empty() ? high_ + 1 : terms_.begin()->first;
  }

  void add_term(Degree d, const Coeff &c) {
    if (d < low_ || d > high_) {
      throw WindowError("term z^" + std::to_string(d) + " outside window");
    }
    if (Ring::is_zero(c)) {
      return;
    }
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (Ring::is_zero(it->second)) {
        terms_.erase(it);
      }
    }
  }

  /// z -> 1/z; flips the direction.
  TruncatedSeries reflected() const {
    TruncatedSeries r(ring_, flip(direction_), -high_, -low_);
    for (const auto &[d, c] : terms_) {
      r.terms_.emplace(-d, c);
    }
    return r;
  }

  TruncatedSeries shifted(Degree by) const {
    TruncatedSeries r(ring_, direction_, low_ + by, high_ + by);
    for (const auto &[d, c] : terms_) {
      r.terms_.emplace_hint(r.terms_.end(), d + by, c);
    }
    return r;
  }

  TruncatedSeries scaled(const Coeff &c) const {
    TruncatedSeries r(ring_, direction_, low_, high_);
    for (const auto &[d, a] : terms_) {
      r.add_term(d, Coeff(a * c));
    }
    return r;
  }

  /// Forgets everything past `new_bound` (beyond it in the expansion
  /// direction). The bound may not extend the current one.
  TruncatedSeries truncated(Degree new_bound) const {
    if (direction_ == Direction::AtInfinity) {
      return reflected().truncated(-new_bound).reflected();
    }
    if (new_bound > high_) {
      throw WindowError("cannot extend a series past its truncation bound");
    }
    TruncatedSeries r(ring_, direction_, std::min(low_, new_bound), new_bound);
    for (const auto &[d, c] : terms_) {
      if (d > new_bound) {
        break;
      }
      r.terms_.emplace_hint(r.terms_.end(), d, c);
    }
    return r;
  }

  /// Terms inside the window as a Laurent polynomial.
  LaurentPoly<Ring> window_poly() const {
    LaurentPoly<Ring> p(ring_);
    for (const auto &[d, c] : terms_) {
      p.add_term(d, c);
    }
    return p;
  }

  friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b) {
    check_pair(a, b);
    if (a.direction_ == Direction::AtInfinity) {
      return (a.reflected() + b.reflected()).reflected();
    }
    const Degree high = std::min(a.high_, b.high_);
    TruncatedSeries r(a.ring_, a.direction_, std::min({a.low_, b.low_, high}), high);
    for (const auto *s : {&a, &b}) {
      for (const auto &[d, c] : s->terms_) {
        if (d > high) {
          break;
        }
        r.add_term(d, c);
      }
    }
    return r;
  }

  TruncatedSeries &operator+=(const TruncatedSeries &rhs) { return *this = *this + rhs; }

  /// Cauchy product. For AtZero the result is exact through
  /// min(a.high + val(b), b.high + val(a)).
  friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
    check_pair(a, b);
    if (a.direction_ == Direction::AtInfinity) {
      return (a.reflected() * b.reflected()).reflected();
    }
    const Degree high = std::min(a.high_ + b.valuation(), b.high_ + a.valuation());
    TruncatedSeries r(a.ring_, a.direction_, std::min(a.low_ + b.low_, high), high);
    for (const auto &[i, x] : a.terms_) {
      if (i + b.valuation() > high) {
        break;
      }
      for (const auto &[j, y] : b.terms_) {
        if (i + j > high) {
          break;
        }
        r.add_term(i + j, Coeff(x * y));
      }
    }
    return r;
  }

  /// Exact equality of windows and terms.
  friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
    if (a.direction_ != b.direction_ || a.low_ != b.low_ || a.high_ != b.high_ ||
        a.terms_.size() != b.terms_.size()) {
      return false;
    }
    auto it = b.terms_.begin();
    for (const auto &[d, c] : a.terms_) {
      if (d != it->first || !(c == it->second)) {
        return false;
      }
      ++it;
    }
    return true;
  }

private:
  static Direction flip(Direction d) {
    return d == Direction::AtZero ? Direction::AtInfinity : Direction::AtZero;
  }

  static void check_pair(const TruncatedSeries &a, const TruncatedSeries &b) {
    if (a.direction_ != b.direction_) {
      throw WindowError("cannot combine a series at zero with a series at infinity");
    }
    if (!a.ring_.compatible(b.ring_)) {
      throw SpecMismatch("series over different coefficient rings");
    }
  }

  Ring ring_;
  Direction direction_;
  Degree low_;
  Degree high_;
  Terms terms_;
};

using ScalarSeries = TruncatedSeries<ScalarRing>;
using AlgebraSeries = TruncatedSeries<AlgebraRing>;

/// Re-windows a Laurent polynomial as a series. For AtZero, `order` is the
/// truncation bound and must be at least the top degree of p; for AtInfinity
/// it must be at most the bottom degree.
template <class Ring>
TruncatedSeries<Ring> embed(const LaurentPoly<Ring> &p, Direction direction, Degree order) {
  if (direction == Direction::AtInfinity) {
    return embed(p.reflected(), Direction::AtZero, -order).reflected();
  }
  if (!p.is_zero() && p.max_degree() > order) {
    throw WindowError("order " + std::to_string(order) + " is below the top degree " +
                      std::to_string(p.max_degree()) + " of the polynomial");
  }
  const Degree low = p.is_zero() ? order : p.min_degree();
  TruncatedSeries<Ring> s(p.ring(), Direction::AtZero, low, order);
  for (const auto &[d, c] : p.terms()) {
    s.add_term(d, c);
  }
  return s;
}

/// Inverse of p in R[[z]]_z, exact through degree `order`.
///
/// Writes p = z^v (c_0 + c_1 z + ...) with c_0 the lowest nonzero
/// coefficient, which must be a unit, and expands
///   p^-1 = c_0^-1 z^-v sum_{l >= 0} u^l,   u = -c_0^-1 (c_1 z + c_2 z^2 + ...).
/// Since u = O(z), powers past l = order + v cannot reach the window.
/// The leading term of the result is c_0^-1 z^-v.
template <class Ring>
TruncatedSeries<Ring> invert_at_zero(const LaurentPoly<Ring> &p, Degree order) {
  if (p.is_zero()) {
    throw NotAUnit("the zero polynomial has no inverse");
  }
  const Degree v = p.min_degree();
  const auto c0_inv = Ring::inverse(p.coeff(v));
  const Ring &ring = p.ring();

  if (order < -v) {
    // Inverse is O(z^-v); nothing in the window is nonzero.
    return TruncatedSeries<Ring>(ring, Direction::AtZero, order, order);
  }
  const Degree inner = order + v;

  LaurentPoly<Ring> u(ring);
  for (const auto &[d, c] : p.terms()) {
    if (d != v && d - v <= inner) {
      u.add_term(d - v, typename Ring::Element(-(c0_inv * c)));
    }
  }

  auto sum = LaurentPoly<Ring>::one(ring);
  auto power = LaurentPoly<Ring>::one(ring);
  for (Degree l = 1; l <= inner && !u.is_zero(); ++l) {
    power = multiply_truncated(power, u, inner);
    if (power.is_zero()) {
      break;
    }
    sum += power;
  }

  TruncatedSeries<Ring> s(ring, Direction::AtZero, -v, order);
  for (const auto &[d, c] : sum.terms()) {
    s.add_term(d - v, typename Ring::Element(c0_inv * c));
  }
  return s;
}

/// Inverse of p in R[[1/z]]_{1/z}, exact down to degree `order`: the
/// z <-> 1/z mirror of invert_at_zero. Requires the top coefficient of p to
/// be a unit.
template <class Ring>
TruncatedSeries<Ring> invert_at_infinity(const LaurentPoly<Ring> &p, Degree order) {
  return invert_at_zero(p.reflected(), -order).reflected();
}

} // namespace loclaurent
