#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "salem/polynomial.hpp"

namespace salem {

/// Monic integer palindromic polynomial of even degree 2m:
/// c_k = c_{2m-k}, c_0 = c_{2m} = 1.  Immutable once built.
class PalindromicPolynomial {
 public:
  /// Validates the invariants; throws InvalidPolynomial.
  static PalindromicPolynomial from_coefficients(std::vector<Int> coeffs);
  /// Parses "1,1,0,-1,..." (constant term first).
  static PalindromicPolynomial parse(const std::string& text);
  /// Builds degree 2m from the free half (c_1..c_m); the rest is mirrored.
  static PalindromicPolynomial from_half(unsigned m, const std::vector<Int>& upper_half);

  const std::vector<Int>& coefficients() const { return coeffs_; }
  unsigned half_degree() const { return m_; }
  unsigned degree() const { return 2 * m_; }
  const IntPoly& poly() const { return poly_; }

  std::string to_string() const;
  bool operator==(const PalindromicPolynomial& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const PalindromicPolynomial& o) const;

 private:
  PalindromicPolynomial(std::vector<Int> coeffs, unsigned m);
  std::vector<Int> coeffs_;
  unsigned m_;
  IntPoly poly_;
};

/// g with x^m g(x + 1/x) = f(x); monic of degree m.
struct TracePolynomial {
  IntPoly poly;
  unsigned degree = 0;
};

Rat evaluate(const PalindromicPolynomial& f, const Rat& x);

/// (A, C): sums of even- and odd-index coefficients.
/// f(1) = A + C and f(-1) = A - C.
std::pair<Int, Int> parity_sums(const PalindromicPolynomial& f);

/// Chebyshev-style reduction of the reciprocal structure.
TracePolynomial trace_polynomial(const PalindromicPolynomial& f);

struct SalemClassification {
  bool is_squarefree = false;
  /// One simple trace root above 2, m-1 inside (-2,2), none at the boundary.
  bool root_pattern_ok = false;
  /// Smallest cyclotomic index dividing f among the admissible candidates.
  std::optional<unsigned> cyclotomic_factor;
  bool is_salem = false;
  /// Salem number, present iff root_pattern_ok; bisected to the requested precision.
  std::optional<double> lambda;
  Int parity_A;
  Int parity_C;
  /// (D, k) with f(1) f(-1) = -D k^2, D > 0 squarefree; absent unless the product is negative.
  std::optional<std::pair<Int, Int>> square_decomposition;
  /// Degree-2 inputs are classified but flagged; the census skips them by default.
  bool degree_two = false;
};

struct ClassifyOptions {
  double lambda_precision = 1e-12;
};

SalemClassification classify(const PalindromicPolynomial& f, const ClassifyOptions& opts = {});

/// Exact test "lambda <= bound" given root_pattern_ok, via the sign of the
/// trace polynomial at bound + 1/bound.  bound <= 1 always fails.
bool salem_lambda_at_most(const TracePolynomial& g, const Rat& bound);

/// Jensen-formula Mahler measure by trapezoidal quadrature on the unit circle,
/// refined (sample doubling) until consecutive estimates agree.
/// Throws QuadratureUnstable when refinement does not settle.
double mahler_measure_jensen(const PalindromicPolynomial& f, std::uint64_t samples,
                             double stability_tol = 1e-7);

}  // namespace salem
