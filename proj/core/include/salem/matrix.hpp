#pragma once

#include <string>
#include <vector>

#include "salem/arith.hpp"
#include "salem/polynomial.hpp"

namespace salem {

/// Small dense matrix of exact rationals, row-major.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const = default;

  bool is_symmetric() const;
  bool is_integral() const;
  bool is_identity() const;
  Int lcm_of_denominators() const;

  Rat determinant() const;             // Gauss, exact
  RatMatrix inverse() const;           // throws DomainError when singular
  /// Coefficients of det(xI - M), constant term first; exact.
  std::vector<Rat> characteristic_polynomial() const;

  std::string to_string() const;  // row-major "p/q" tokens, comma separated

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Column-style Hermite normal form basis of the lattice spanned by the
/// columns of gens (must have full row rank r).  Returns an r x r matrix
/// whose columns are a canonical lattice basis (lower triangular, positive
/// diagonal, reduced off-diagonal entries).
std::vector<std::vector<Int>> hnf_column_basis(std::vector<std::vector<Int>> gens_columns,
                                               std::size_t r);

}  // namespace salem
