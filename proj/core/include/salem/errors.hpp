#pragma once

#include <stdexcept>
#include <string>

namespace salem {

/// Root of the library's error hierarchy.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A polynomial string or coefficient list violates the palindromic-polynomial invariants.
struct InvalidPolynomial : Error {
  using Error::Error;
};

/// A quadratic form is not symmetric, is degenerate, or fails a parse.
struct InvalidForm : Error {
  using Error::Error;
};

/// Sturm counting was asked to use an endpoint at which the polynomial vanishes.
struct EndpointIsRoot : Error {
  using Error::Error;
};

/// Consecutive quadrature refinements failed to settle within tolerance.
struct QuadratureUnstable : Error {
  using Error::Error;
};

/// An enumeration request exceeds the configured candidate budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(std::string search_space_size)
      : Error("search space of size " + search_space_size + " exceeds the configured budget"),
        search_space(std::move(search_space_size)) {}
  std::string search_space;
};

/// The isometry handed to integralize has a non-integral characteristic polynomial.
struct NonIntegerCharPoly : Error {
  using Error::Error;
};

/// The matrix does not preserve the quadratic form it was paired with.
struct NotAnIsometry : Error {
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

}  // namespace salem
