#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salem/arith.hpp"

namespace salem {

/// Dense univariate polynomial over Z, constant term first.
/// Normalized so that the coefficient vector is empty exactly for the zero polynomial.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(Int c);
  /// x^n - 1, x + 2, ... convenience: monomial c*x^n.
  static IntPoly monomial(Int c, unsigned n);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& leading() const;
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coefficients() const { return c_; }

  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;
  int sign_at(const Rat& x) const;
  int sign_at(const ExtRat& x) const;

  IntPoly derivative() const;
  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;
  IntPoly primitive_part() const;

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& s) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  /// Quotient if the division is exact over Z, nullopt otherwise.
  std::optional<IntPoly> divide_exact(const IntPoly& divisor) const;
  bool divisible_by(const IntPoly& divisor) const;

  /// Pseudo-remainder of a by b scaled by a *positive* power of |lc(b)|,
  /// so signs stay comparable with the true remainder.  Requires b != 0.
  static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

  /// Primitive polynomial gcd, positive leading coefficient.
  static IntPoly gcd(IntPoly a, IntPoly b);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Int> c_;
};

bool is_squarefree(const IntPoly& f);

/// f / gcd(f, f'): same roots, all simple.
IntPoly squarefree_part_poly(const IntPoly& f);

/// Exact number of distinct real roots of g in the open interval (lo, hi),
/// by Sturm sign-variation counts.  Endpoints must not be roots.
/// Throws EndpointIsRoot if g vanishes at a finite endpoint.
int count_real_roots(const IntPoly& g, const ExtRat& lo, const ExtRat& hi);

}  // namespace salem
