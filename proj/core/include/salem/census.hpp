#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "salem/poly_core.hpp"
#include "salem/report.hpp"

namespace salem {

/// Search request: polynomials of degree 2m with Mahler measure <= Q,
/// optionally restricted to f(1) f(-1) = -D k^2 (D fixed squarefree).
struct CensusQuery {
  unsigned m = 2;
  std::optional<std::int64_t> D;
  Rat Q;
};

struct ConstantsBundle {
  Rat omega;
  Rat kappa0;
  Rat kappa;
  unsigned t = 0;
};

/// Mahler coefficient bounds floor(binom(2m, k) Q) for the free half k = 1..m.
std::vector<Int> coefficient_bounds(unsigned m, const Rat& Q);
/// |C| <= 2^{2m-1} Q.
Rat aggregate_C_bound(unsigned m, const Rat& Q);
/// |A| <= (2^{2m-1} - 2) Q + 2.
Rat aggregate_A_bound(unsigned m, const Rat& Q);

struct SalemEntry {
  PalindromicPolynomial poly;
  SalemClassification cls;
};

struct EnumerateOptions {
  std::uint64_t budget = 100'000'000;  // candidate vectors
  unsigned threads = 1;
  double lambda_precision = 1e-12;
};

/// Exhaustive box search; keeps Salem polynomials with lambda <= Q (exact
/// boundary test) and the D-condition when present.  Output sorted by
/// (lambda, coefficients); independent of the thread count.
/// Throws BudgetExceeded when the box outgrows the budget.
std::vector<SalemEntry> enumerate_salem(const CensusQuery& query,
                                        const EnumerateOptions& opts = {});

/// 2^{m(m-1)} / m * prod_{k=0}^{m-2} k!^2 / (2k+1)!.
Rat omega(unsigned m);
/// The parity-split constant of the coefficient-count bound; m >= 2.
Rat kappa0(unsigned m);
/// 2^{t+2m} kappa0(m) for odd D, 3 * 2^{t+2m-2} kappa0(m) for even D.
Rat kappa(unsigned m, std::int64_t D);
ConstantsBundle constants(unsigned m, std::int64_t D);

/// kappa(m,D) / (pi sqrt(D)) * Q^{m-1} log Q (natural log); Q >= 1.
double theorem_A_bound(unsigned m, std::int64_t D, double Q);

/// One row per Q: empirical count vs omega Q^m (no D) or the Theorem A main
/// term (D given).  Columns: m,D,Q,count,paper_term,abs_error,ratio (+ a
/// JSON-only polynomials column).
Report census_report(unsigned m, std::optional<std::int64_t> D, const std::vector<Rat>& q_grid,
                     const EnumerateOptions& opts = {});

}  // namespace salem
