#pragma once

#include "loclaurent/scalar.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace loclaurent {

class AlgebraSpec;
using SpecPtr = std::shared_ptr<const AlgebraSpec>;

/// Which algebra axiom a structure-constant table breaks, and where.
struct AxiomViolation {
  enum class Axiom { Shape, Commutativity, Associativity, Unit };

  Axiom axiom;
  std::vector<std::size_t> indices;
  std::string message;
};

/// A finite-dimensional commutative unital algebra over the rationals, given
/// by structure constants c[i][j][k] with e_i * e_j = sum_k c[i][j][k] e_k.
///
/// Construction does not check the axioms; call validate() for that. The
/// library treats an unvalidated spec as untrusted input.
class AlgebraSpec {
public:
  using Table = std::vector<std::vector<std::vector<Scalar>>>;

  AlgebraSpec(std::vector<std::string> basis_labels, Table structure_constants,
              std::vector<Scalar> unit);

  static SpecPtr make(std::vector<std::string> basis_labels, Table structure_constants,
                      std::vector<Scalar> unit);

  /// The ground field Q itself: one basis vector "1" with 1 * 1 = 1.
  static SpecPtr point();

  /// Q[eps] / (eps^2), basis {1, eps}.
  static SpecPtr dual_numbers(std::string nilpotent_label = "eps");

  std::size_t dimension() const noexcept { return labels_.size(); }
  const std::vector<std::string> &basis_labels() const noexcept { return labels_; }
  const Table &structure_constants() const noexcept { return table_; }
  const Scalar &constant(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[i][j][k];
  }
  const std::vector<Scalar> &unit() const noexcept { return unit_; }

  /// First violated axiom, or nullopt when the table defines a commutative,
  /// associative algebra with the given unit.
  std::optional<AxiomViolation> validate() const;

  /// Structural equality (same labels, constants and unit).
  bool operator==(const AlgebraSpec &other) const;

private:
  std::vector<std::string> labels_;
  Table table_;
  std::vector<Scalar> unit_;
};

/// Same algebra: pointer identity or structural equality.
bool same_spec(const SpecPtr &a, const SpecPtr &b);

class AlgebraElement {
public:
  AlgebraElement(SpecPtr spec, std::vector<Scalar> coords);

  static AlgebraElement zero(SpecPtr spec);
  static AlgebraElement one(SpecPtr spec);
  /// scalar * unit
  static AlgebraElement constant(SpecPtr spec, const Scalar &scalar);
  static AlgebraElement basis(SpecPtr spec, std::size_t index);

  const SpecPtr &spec() const noexcept { return spec_; }
  const std::vector<Scalar> &coords() const noexcept { return coords_; }
  const Scalar &operator[](std::size_t i) const { return coords_[i]; }

  bool is_zero() const;

  AlgebraElement &operator+=(const AlgebraElement &rhs);
  AlgebraElement &operator-=(const AlgebraElement &rhs);
  AlgebraElement &operator*=(const AlgebraElement &rhs);
  AlgebraElement &operator*=(const Scalar &rhs);

  friend AlgebraElement operator+(AlgebraElement lhs, const AlgebraElement &rhs) {
    return lhs += rhs;
  }
  friend AlgebraElement operator-(AlgebraElement lhs, const AlgebraElement &rhs) {
    return lhs -= rhs;
  }
  friend AlgebraElement operator*(const AlgebraElement &lhs, const AlgebraElement &rhs);
  friend AlgebraElement operator*(AlgebraElement lhs, const Scalar &rhs) { return lhs *= rhs; }
  friend AlgebraElement operator*(const Scalar &lhs, AlgebraElement rhs) { return rhs *= lhs; }
  AlgebraElement operator-() const;

  /// Coordinate equality; throws SpecMismatch across algebras.
  friend bool operator==(const AlgebraElement &lhs, const AlgebraElement &rhs);

  /// Matrix of x -> (*this) * x in the basis; column j holds (*this) * e_j.
  std::vector<std::vector<Scalar>> multiplication_matrix() const;

  /// The b with (*this) * b = unit. Throws NotAUnit when the multiplication
  /// matrix is singular.
  AlgebraElement inverse() const;

  std::string to_string() const;

private:
  void require_same(const AlgebraElement &other, const char *op) const;

  SpecPtr spec_;
  std::vector<Scalar> coords_;
};

/// Exact determinant by Gaussian elimination over Q.
Scalar determinant(std::vector<std::vector<Scalar>> matrix);

/// Coefficient-ring adaptors used by the Laurent polynomial and series
/// templates.
struct ScalarRing {
  using Element = Scalar;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  static bool is_zero(const Element &x) { return x == 0; }
  static Element inverse(const Element &x);
  bool compatible(const ScalarRing &) const { return true; }
  std::string describe() const { return "Q"; }
};

struct AlgebraRing {
  using Element = AlgebraElement;

  SpecPtr spec;

  Element zero() const { return AlgebraElement::zero(spec); }
  Element one() const { return AlgebraElement::one(spec); }
  static bool is_zero(const Element &x) { return x.is_zero(); }
  static Element inverse(const Element &x) { return x.inverse(); }
  bool compatible(const AlgebraRing &other) const { return same_spec(spec, other.spec); }
  std::string describe() const;
};

} // namespace loclaurent
