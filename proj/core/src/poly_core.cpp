#include "salem/poly_core.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "salem/cyclotomic.hpp"
#include "salem/errors.hpp"

namespace salem {

PalindromicPolynomial::PalindromicPolynomial(std::vector<Int> coeffs, unsigned m)
    : coeffs_(std::move(coeffs)), m_(m), poly_(coeffs_) {}

PalindromicPolynomial PalindromicPolynomial::from_coefficients(std::vector<Int> coeffs) {
  const std::size_t len = coeffs.size();
  if (len < 3 || len % 2 == 0)
    throw InvalidPolynomial("need an odd number of coefficients, at least 3");
  const unsigned m = static_cast<unsigned>((len - 1) / 2);
  if (coeffs.front() != 1 || coeffs.back() != 1)
    throw InvalidPolynomial("constant and leading coefficients must be 1");
  for (std::size_t k = 0; k <= m; ++k) {
    if (coeffs[k] != coeffs[len - 1 - k])
      throw InvalidPolynomial("coefficients are not palindromic");
  }
  return PalindromicPolynomial(std::move(coeffs), m);
}

PalindromicPolynomial PalindromicPolynomial::parse(const std::string& text) {
  std::vector<Int> coeffs;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, ',')) {
    const auto begin = token.find_first_not_of(" \t");
    const auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) throw InvalidPolynomial("empty coefficient in '" + text + "'");
    try {
      coeffs.emplace_back(token.substr(begin, end - begin + 1));
    } catch (const std::invalid_argument&) {
      throw InvalidPolynomial("bad integer '" + token + "'");
    }
  }
  return from_coefficients(std::move(coeffs));
}

PalindromicPolynomial PalindromicPolynomial::from_half(unsigned m,
                                                       const std::vector<Int>& upper_half) {
  if (m == 0 || upper_half.size() != m)
    throw InvalidPolynomial("expected exactly m free coefficients");
  std::vector<Int> coeffs(2 * m + 1);
  coeffs[0] = 1;
  coeffs[2 * m] = 1;
  for (unsigned k = 1; k <= m; ++k) {
    coeffs[k] = upper_half[k - 1];
    coeffs[2 * m - k] = upper_half[k - 1];
  }
  return PalindromicPolynomial(std::move(coeffs), m);
}

std::string PalindromicPolynomial::to_string() const { return poly_.to_string(); }

bool PalindromicPolynomial::operator<(const PalindromicPolynomial& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Rat evaluate(const PalindromicPolynomial& f, const Rat& x) { return f.poly().eval(x); }

std::pair<Int, Int> parity_sums(const PalindromicPolynomial& f) {
  Int a(0), c(0);
  const auto& coeffs = f.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k % 2 == 0)
      a += coeffs[k];
    else
      c += coeffs[k];
  }
  return {a, c};
}

TracePolynomial trace_polynomial(const PalindromicPolynomial& f) {
  const unsigned m = f.half_degree();
  const auto& c = f.coefficients();
  // x^j + x^-j = p_j(x + 1/x):  p_0 = 2, p_1 = y, p_{j+1} = y p_j - p_{j-1}.
  IntPoly prev = IntPoly::constant(2);
  IntPoly cur({0, 1});
  const IntPoly y({0, 1});
  IntPoly g = IntPoly::constant(c[m]);
  for (unsigned j = 1; j <= m; ++j) {
    g = g + cur * c[m + j];
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return TracePolynomial{std::move(g), m};
}

bool salem_lambda_at_most(const TracePolynomial& g, const Rat& bound) {
  if (bound <= 1) return false;
  // y = lambda + 1/lambda is increasing in lambda on (1, inf); the unique trace
  // root above 2 sits left of bound + 1/bound exactly when g is >= 0 there.
  const Rat y = bound + Rat(1) / bound;
  return g.poly.sign_at(y) >= 0;
}

namespace {

/// Bisection for lambda in (1, inf): the predicate "lambda <= t" is the exact
/// sign of g at t + 1/t.  Assumes the root pattern already holds.
double bisect_lambda(const IntPoly& g, double precision) {
  auto sign_at_lambda = [&](const Rat& t) { return g.sign_at(t + Rat(1) / t); };
  Rat lo(1), hi(2);
  while (sign_at_lambda(hi) < 0) {
    lo = hi;
    hi *= 2;
  }
  if (sign_at_lambda(hi) == 0) return hi.get_d();
  const Rat eps(precision);
  while (hi - lo > eps) {
    Rat mid = (lo + hi) / 2;
    const int s = sign_at_lambda(mid);
    if (s == 0) return mid.get_d();
    if (s < 0)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return ((lo + hi) / 2).get_d();
}

}  // namespace

SalemClassification classify(const PalindromicPolynomial& f, const ClassifyOptions& opts) {
  SalemClassification out;
  const unsigned m = f.half_degree();
  out.degree_two = (m == 1);

  out.is_squarefree = is_squarefree(f.poly());

  const TracePolynomial g = trace_polynomial(f);
  const Rat two(2), minus_two(-2);
  const bool boundary_free = g.poly.sign_at(two) != 0 && g.poly.sign_at(minus_two) != 0;
  if (boundary_free) {
    const IntPoly gsf = squarefree_part_poly(g.poly);
    const int above = count_real_roots(gsf, ExtRat::at(two), ExtRat::pos_infinity());
    const int inside = count_real_roots(gsf, ExtRat::at(minus_two), ExtRat::at(two));
    out.root_pattern_ok = (above == 1) && (inside == static_cast<int>(m) - 1);
  }

  const unsigned max_totient = (m >= 2) ? 2 * m - 2 : 0;
  for (unsigned n : cyclotomic_candidate_indices(max_totient)) {
    if (f.poly().divisible_by(cyclotomic(n))) {
      out.cyclotomic_factor = n;
      break;
    }
  }

  out.is_salem = out.is_squarefree && out.root_pattern_ok && !out.cyclotomic_factor.has_value();

  if (out.root_pattern_ok) out.lambda = bisect_lambda(g.poly, opts.lambda_precision);

  auto [a, c] = parity_sums(f);
  out.parity_A = std::move(a);
  out.parity_C = std::move(c);

  const Int product = (out.parity_A + out.parity_C) * (out.parity_A - out.parity_C);
  if (product < 0) {
    auto [s, k] = squarefree_part(product);
    out.square_decomposition = std::make_pair(-s, k);
  }
  return out;
}

namespace {

/// Mean of log|f| over an offset uniform grid on the unit circle.
/// Returns NaN when a sample lands on (numerically) a root.
double log_mean_on_circle(const IntPoly& f, std::uint64_t n, double offset) {
  const auto& coeffs = f.coefficients();
  long double acc = 0.0L;
  for (std::uint64_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) + offset) / static_cast<double>(n);
    const std::complex<double> z = std::polar(1.0, 2.0 * M_PI * t);
    std::complex<double> v(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + it->get_d();
    const double mag = std::abs(v);
    if (!(mag > 0.0) || !std::isfinite(mag)) return std::nan("");
    acc += std::log(static_cast<long double>(mag));
  }
  return static_cast<double>(acc / static_cast<long double>(n));
}

double stable_log_mean(const IntPoly& f, std::uint64_t n) {
  // Jittered restarts when a sample sits on a unit-circle root.
  static constexpr double kOffsets[] = {0.5, 0.3819660112501051, 0.2360679774997897};
  for (double offset : kOffsets) {
    const double v = log_mean_on_circle(f, n, offset);
    if (std::isfinite(v)) return v;
  }
  throw QuadratureUnstable("samples keep landing on unit-circle roots");
}

}  // namespace

double mahler_measure_jensen(const PalindromicPolynomial& f, std::uint64_t samples,
                             double stability_tol) {
  if (samples < 16) samples = 16;
  static constexpr int kMaxDoublings = 14;
  double prev = stable_log_mean(f.poly(), samples);
  std::uint64_t n = samples;
  for (int i = 0; i < kMaxDoublings; ++i) {
    n *= 2;
    const double cur = stable_log_mean(f.poly(), n);
    if (std::abs(cur - prev) <= stability_tol) return std::exp(cur);
    prev = cur;
  }
  throw QuadratureUnstable("quadrature refinements did not settle");
}

}  // namespace salem
