#pragma once

#include <stdexcept>
#include <string>

namespace loclaurent {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient algebras.
class SpecMismatch : public Error {
public:
  using Error::Error;
};

/// An element that had to be inverted is not a unit.
class NotAUnit : public Error {
public:
  using Error::Error;
};

/// A truncation window cannot hold the requested data, or two series are
/// expanded at different points.
class WindowError : public Error {
public:
  using Error::Error;
};

/// A sum of rational functions left a nonzero remainder.
class NonPolynomialSum : public Error {
public:
  using Error::Error;
};

/// Fixed-point data that cannot come from a compact Hamiltonian circle space.
class InconsistentData : public Error {
public:
  using Error::Error;
};

/// Evaluation point is a root of some localization denominator.
class DenominatorVanishes : public Error {
public:
  using Error::Error;
};

/// A verification check was asked to run on data outside its hypotheses.
class PreconditionViolated : public Error {
public:
  using Error::Error;
};

/// Malformed dataset text. `where()` is a "line L, column C" position or a
/// field path such as "components[1].summands[0].weight".
class ParseError : public Error {
public:
  ParseError(std::string where, const std::string &what)
      : Error(where + ": " + what), where_(std::move(where)) {}

  const std::string &where() const noexcept { return where_; }

private:
  std::string where_;
};

} // namespace loclaurent
