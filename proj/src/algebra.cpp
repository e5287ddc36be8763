#include "loclaurent/algebra.hpp"

#include "loclaurent/errors.hpp"

#include <sstream>
#include <utility>

namespace loclaurent {

AlgebraSpec::AlgebraSpec(std::vector<std::string> basis_labels, Table structure_constants,
                         std::vector<Scalar> unit)
    : labels_(std::move(basis_labels)), table_(std::move(structure_constants)),
      unit_(std::move(unit)) {}

SpecPtr AlgebraSpec::make(std::vector<std::string> basis_labels, Table structure_constants,
                          std::vector<Scalar> unit) {
  return std::make_shared<const AlgebraSpec>(std::move(basis_labels),
                                             std::move(structure_constants), std::move(unit));
}

SpecPtr AlgebraSpec::point() {
  static const SpecPtr spec = make({"1"}, {{{Scalar(1)}}}, {Scalar(1)});
  return spec;
}

SpecPtr AlgebraSpec::dual_numbers(std::string nilpotent_label) {
  Table t(2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2, Scalar(0))));
  t[0][0][0] = 1;
  t[0][1][1] = 1;
  t[1][0][1] = 1;
  return make({"1", std::move(nilpotent_label)}, std::move(t), {Scalar(1), Scalar(0)});
}

std::optional<AxiomViolation> AlgebraSpec::validate() const {
  using A = AxiomViolation::Axiom;
  const std::size_t d = dimension();
  if (d == 0) {
    return AxiomViolation{A::Shape, {}, "dimension must be positive"};
  }
  if (unit_.size() != d) {
    return AxiomViolation{A::Shape, {}, "unit has wrong length"};
  }
  if (table_.size() != d) {
    return AxiomViolation{A::Shape, {}, "structure constant table has wrong size"};
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (table_[i].size() != d) {
      return AxiomViolation{A::Shape, {i}, "structure constant row has wrong size"};
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (table_[i][j].size() != d) {
        return AxiomViolation{A::Shape, {i, j}, "structure constant entry has wrong size"};
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (table_[i][j][k] != table_[j][i][k]) {
          std::ostringstream msg;
          msg << "e" << i << "*e" << j << " != e" << j << "*e" << i << " at coordinate " << k;
          return AxiomViolation{A::Commutativity, {i, j}, msg.str()};
        }
      }
    }
  }

  // (e_i e_j) e_l = sum_k c_ij^k e_k e_l ; e_i (e_j e_l) = sum_k c_jl^k e_i e_k
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t m = 0; m < d; ++m) {
          Scalar left = 0;
          Scalar right = 0;
          for (std::size_t k = 0; k < d; ++k) {
            left += table_[i][j][k] * table_[k][l][m];
            right += table_[j][l][k] * table_[i][k][m];
          }
          if (left != right) {
            std::ostringstream msg;
            msg << "(e" << i << "*e" << j << ")*e" << l << " != e" << i << "*(e" << j << "*e"
                << l << ") at coordinate " << m;
            return AxiomViolation{A::Associativity, {i, j, l}, msg.str()};
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t m = 0; m < d; ++m) {
      Scalar v = 0;
      for (std::size_t k = 0; k < d; ++k) {
        v += unit_[k] * table_[k][i][m];
      }
      if (v != (i == m ? 1 : 0)) {
        std::ostringstream msg;
        msg << "unit*e" << i << " != e" << i << " at coordinate " << m;
        return AxiomViolation{A::Unit, {i}, msg.str()};
      }
    }
  }
  return std::nullopt;
}

bool AlgebraSpec::operator==(const AlgebraSpec &other) const {
  return labels_ == other.labels_ && unit_ == other.unit_ && table_ == other.table_;
}

bool same_spec(const SpecPtr &a, const SpecPtr &b) {
  return a == b || (a && b && *a == *b);
}

AlgebraElement::AlgebraElement(SpecPtr spec, std::vector<Scalar> coords)
    : spec_(std::move(spec)), coords_(std::move(coords)) {
  if (!spec_) {
    throw SpecMismatch("algebra element without a spec");
  }
  if (coords_.size() != spec_->dimension()) {
    throw SpecMismatch("coordinate vector has length " + std::to_string(coords_.size()) +
                       ", algebra dimension is " + std::to_string(spec_->dimension()));
  }
}

AlgebraElement AlgebraElement::zero(SpecPtr spec) {
  const std::size_t d = spec->dimension();
  return AlgebraElement(std::move(spec), std::vector<Scalar>(d, Scalar(0)));
}

AlgebraElement AlgebraElement::one(SpecPtr spec) {
  auto unit = spec->unit();
  return AlgebraElement(std::move(spec), std::move(unit));
}

AlgebraElement AlgebraElement::constant(SpecPtr spec, const Scalar &scalar) {
  return one(std::move(spec)) * scalar;
}

AlgebraElement AlgebraElement::basis(SpecPtr spec, std::size_t index) {
  auto e = zero(std::move(spec));
  e.coords_.at(index) = 1;
  return e;
}

bool AlgebraElement::is_zero() const {
  for (const auto &c : coords_) {
    if (c != 0) {
      return false;
    }
  }
  return true;
}

void AlgebraElement::require_same(const AlgebraElement &other, const char *op) const {
  if (!same_spec(spec_, other.spec_)) {
    throw SpecMismatch(std::string("algebra mismatch in ") + op);
  }
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &rhs) {
  require_same(rhs, "addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] += rhs.coords_[i];
  }
  return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &rhs) {
  require_same(rhs, "subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] -= rhs.coords_[i];
  }
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(const AlgebraElement &rhs) {
  *this = *this * rhs;
  return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Scalar &rhs) {
  for (auto &c : coords_) {
    c *= rhs;
  }
  return *this;
}

AlgebraElement operator*(const AlgebraElement &lhs, const AlgebraElement &rhs) {
  lhs.require_same(rhs, "multiplication");
  const std::size_t d = lhs.coords_.size();
  std::vector<Scalar> out(d, Scalar(0));
  const auto &table = lhs.spec_->structure_constants();
  for (std::size_t i = 0; i < d; ++i) {
    if (lhs.coords_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < d; ++j) {
      if (rhs.coords_[j] == 0) {
        continue;
      }
      const Scalar ab = lhs.coords_[i] * rhs.coords_[j];
      for (std::size_t k = 0; k < d; ++k) {
        if (table[i][j][k] != 0) {
          out[k] += ab * table[i][j][k];
        }
      }
    }
  }
  return AlgebraElement(lhs.spec_, std::move(out));
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto &c : r.coords_) {
    c = -c;
  }
  return r;
}

bool operator==(const AlgebraElement &lhs, const AlgebraElement &rhs) {
  lhs.require_same(rhs, "comparison");
  return lhs.coords_ == rhs.coords_;
}

std::vector<std::vector<Scalar>> AlgebraElement::multiplication_matrix() const {
  const std::size_t d = coords_.size();
  std::vector<std::vector<Scalar>> m(d, std::vector<Scalar>(d, Scalar(0)));
  for (std::size_t j = 0; j < d; ++j) {
    const AlgebraElement column = *this * basis(spec_, j);
    for (std::size_t i = 0; i < d; ++i) {
      m[i][j] = column.coords_[i];
    }
  }
  return m;
}

AlgebraElement AlgebraElement::inverse() const {
  // Solve M b = unit with Gauss-Jordan elimination on [M | unit].
  auto m = multiplication_matrix();
  const std::size_t d = m.size();
  for (std::size_t i = 0; i < d; ++i) {
    m[i].push_back(spec_->unit()[i]);
  }
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == d) {
      throw NotAUnit("element " + to_string() + " is not a unit");
    }
    std::swap(m[pivot], m[col]);
    const Scalar inv = Scalar(1) / m[col][col];
    for (std::size_t c = col; c <= d; ++c) {
      m[col][c] *= inv;
    }
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) {
        continue;
      }
      const Scalar f = m[r][col];
      for (std::size_t c = col; c <= d; ++c) {
        m[r][c] -= f * m[col][c];
      }
    }
  }
  std::vector<Scalar> b(d);
  for (std::size_t i = 0; i < d; ++i) {
    b[i] = m[i][d];
  }
  return AlgebraElement(spec_, std::move(b));
}

std::string AlgebraElement::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out << (i ? ", " : "") << format_scalar(coords_[i]);
  }
  out << ")";
  return out.str();
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t d = m.size();
  Scalar det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == d) {
      return 0;
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < d; ++r) {
      if (m[r][col] == 0) {
        continue;
      }
      const Scalar f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < d; ++c) {
        m[r][c] -= f * m[col][c];
      }
    }
  }
  return det;
}

ScalarRing::Element ScalarRing::inverse(const Element &x) {
  if (x == 0) {
    throw NotAUnit("0 is not a unit");
  }
  return Scalar(1) / x;
}

std::string AlgebraRing::describe() const {
  std::string s = "algebra<";
  for (std::size_t i = 0; i < spec->dimension(); ++i) {
    s += (i ? "," : "") + spec->basis_labels()[i];
  }
  return s + ">";
}

} // namespace loclaurent
