#include "salem/census.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "salem/errors.hpp"

namespace salem {

namespace {

Int binomial(unsigned n, unsigned k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return out;
}

Int pow2(unsigned e) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

void require_query(const CensusQuery& query) {
  if (query.m < 2) throw DomainError("census needs m >= 2 (degree-2 inputs are out of scope)");
  if (query.Q <= 0) throw DomainError("census needs Q > 0");
  if (query.D) {
    if (*query.D <= 0 || !is_squarefree_int(Int(*query.D)))
      throw DomainError("census D must be positive squarefree");
  }
}

}  // namespace

std::vector<Int> coefficient_bounds(unsigned m, const Rat& Q) {
  std::vector<Int> bounds;
  bounds.reserve(m);
  for (unsigned k = 1; k <= m; ++k) bounds.push_back(floor_rat(Rat(binomial(2 * m, k)) * Q));
  return bounds;
}

Rat aggregate_C_bound(unsigned m, const Rat& Q) { return Rat(pow2(2 * m - 1)) * Q; }

Rat aggregate_A_bound(unsigned m, const Rat& Q) { return Rat(pow2(2 * m - 1) - 2) * Q + 2; }

namespace {

/// One candidate from the coefficient box, checked in the fixed filter order:
/// structural signs, squarefree, trace-root pattern, cyclotomic divisor,
/// lambda <= Q (exact), D match.  Returns the surviving entry.
std::optional<SalemEntry> sift_candidate(unsigned m, const std::vector<std::int64_t>& half,
                                         const Rat& Q, const std::optional<std::int64_t>& want_d,
                                         double lambda_precision) {
  // f(1) < 0 < f(-1) is forced by the Salem root pattern; both are cheap.
  std::int64_t f1 = 2, fm1 = 2;
  for (unsigned k = 1; k < m; ++k) {
    f1 += 2 * half[k - 1];
    fm1 += (k % 2 == 0) ? 2 * half[k - 1] : -2 * half[k - 1];
  }
  f1 += half[m - 1];
  fm1 += (m % 2 == 0) ? half[m - 1] : -half[m - 1];
  if (f1 >= 0 || fm1 <= 0) return std::nullopt;

  std::vector<Int> upper(half.begin(), half.end());
  const auto f = PalindromicPolynomial::from_half(m, upper);

  if (!is_squarefree(f.poly())) return std::nullopt;

  const TracePolynomial g = trace_polynomial(f);
  // Squarefree f with f(1), f(-1) != 0 keeps the trace polynomial squarefree.
  const Rat two(2), minus_two(-2);
  if (g.poly.sign_at(two) == 0 || g.poly.sign_at(minus_two) == 0) return std::nullopt;
  if (count_real_roots(g.poly, ExtRat::at(two), ExtRat::pos_infinity()) != 1) return std::nullopt;
  if (count_real_roots(g.poly, ExtRat::at(minus_two), ExtRat::at(two)) !=
      static_cast<int>(m) - 1)
    return std::nullopt;

  for (unsigned n : cyclotomic_candidate_indices(2 * m - 2)) {
    if (f.poly().divisible_by(cyclotomic(n))) return std::nullopt;
  }

  if (!salem_lambda_at_most(g, Q)) return std::nullopt;

  if (want_d) {
    const Int product(f1 * fm1);
    auto [s, k] = squarefree_part(product);
    (void)k;
    if (-s != *want_d) return std::nullopt;
  }

  ClassifyOptions copts;
  copts.lambda_precision = lambda_precision;
  SalemClassification cls = classify(f, copts);
  return SalemEntry{f, std::move(cls)};
}

void enumerate_box(unsigned m, const std::vector<Int>& bounds, std::int64_t c1_lo,
                   std::int64_t c1_hi, const Rat& Q, const std::optional<std::int64_t>& want_d,
                   double lambda_precision, std::vector<SalemEntry>& out) {
  std::vector<std::int64_t> half(m, 0);
  std::vector<std::int64_t> lo(m), hi(m);
  lo[0] = c1_lo;
  hi[0] = c1_hi;
  for (unsigned k = 1; k < m; ++k) {
    hi[k] = bounds[k].get_si();
    lo[k] = -hi[k];
  }
  for (unsigned k = 0; k < m; ++k) half[k] = lo[k];
  if (c1_lo > c1_hi) return;

  while (true) {
    if (auto entry = sift_candidate(m, half, Q, want_d, lambda_precision))
      out.push_back(std::move(*entry));
    unsigned k = m;
    while (k > 0) {
      --k;
      if (half[k] < hi[k]) {
        ++half[k];
        for (unsigned j = k + 1; j < m; ++j) half[j] = lo[j];
        break;
      }
      if (k == 0) return;
    }
  }
}

}  // namespace

std::vector<SalemEntry> enumerate_salem(const CensusQuery& query, const EnumerateOptions& opts) {
  require_query(query);
  const unsigned m = query.m;
  const auto bounds = coefficient_bounds(m, query.Q);

  Int box_size = 1;
  for (const auto& b : bounds) box_size *= 2 * b + 1;
  if (box_size > Int(opts.budget)) throw BudgetExceeded(box_size.get_str());

  const std::int64_t b1 = bounds[0].get_si();
  const unsigned threads = std::max(1u, opts.threads);
  std::vector<std::vector<SalemEntry>> shards(threads);

  if (threads == 1) {
    enumerate_box(m, bounds, -b1, b1, query.Q, query.D, opts.lambda_precision, shards[0]);
  } else {
    // Disjoint c_1 ranges; the final sort makes the merge order irrelevant.
    std::vector<std::thread> pool;
    const std::int64_t span = 2 * b1 + 1;
    for (unsigned i = 0; i < threads; ++i) {
      const std::int64_t lo = -b1 + span * i / threads;
      const std::int64_t hi = -b1 + span * (i + 1) / threads - 1;
      pool.emplace_back([&, i, lo, hi]() {
        enumerate_box(m, bounds, lo, hi, query.Q, query.D, opts.lambda_precision, shards[i]);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<SalemEntry> out;
  for (auto& shard : shards) {
    out.insert(out.end(), std::make_move_iterator(shard.begin()),
               std::make_move_iterator(shard.end()));
  }
  std::sort(out.begin(), out.end(), [](const SalemEntry& x, const SalemEntry& y) {
    const double lx = x.cls.lambda.value_or(0.0);
    const double ly = y.cls.lambda.value_or(0.0);
    if (lx != ly) return lx < ly;
    return x.poly < y.poly;
  });
  return out;
}

Rat omega(unsigned m) {
  if (m == 0) throw DomainError("omega needs m >= 1");
  Rat out(pow2(m * (m - 1)), Int(m));
  out.canonicalize();
  for (unsigned k = 0; m >= 2 && k <= m - 2; ++k) {
    Int fact_k;
    mpz_fac_ui(fact_k.get_mpz_t(), k);
    Int fact_2k1;
    mpz_fac_ui(fact_2k1.get_mpz_t(), 2 * k + 1);
    Rat term(fact_k * fact_k, fact_2k1);
    term.canonicalize();
    out *= term;
  }
  return out;
}

Rat kappa0(unsigned m) {
  if (m < 2) throw DomainError("kappa0 needs m >= 2");
  Int fact;
  if (m % 2 == 0) {
    const unsigned half = m / 2 - 1;
    Int num = pow2((m - 1) * (m - 2));
    Int base = pow2(2 * m) - 4;
    for (unsigned i = 0; i < half; ++i) num *= base;
    mpz_fac_ui(fact.get_mpz_t(), half);
    Rat out(num, fact * fact);
    out.canonicalize();
    return out;
  }
  const unsigned half = (m - 1) / 2;
  Int num = pow2((2 * m - 1) * half);
  Int base = pow2(2 * m - 1) - 2;
  for (unsigned i = 0; i < (m - 3) / 2; ++i) num *= base;
  mpz_fac_ui(fact.get_mpz_t(), half);
  Rat out(num, fact * fact);
  out.canonicalize();
  return out;
}

Rat kappa(unsigned m, std::int64_t D) {
  if (D <= 0 || !is_squarefree_int(Int(D))) throw DomainError("kappa needs D positive squarefree");
  const unsigned t = distinct_prime_count(static_cast<std::uint64_t>(D));
  if (D % 2 != 0) return Rat(pow2(t + 2 * m)) * kappa0(m);
  return Rat(3 * pow2(t + 2 * m - 2)) * kappa0(m);
}

ConstantsBundle constants(unsigned m, std::int64_t D) {
  ConstantsBundle b;
  b.omega = omega(m);
  b.kappa0 = kappa0(m);
  b.kappa = kappa(m, D);
  b.t = distinct_prime_count(static_cast<std::uint64_t>(D));
  return b;
}

double theorem_A_bound(unsigned m, std::int64_t D, double Q) {
  if (Q < 1.0) throw DomainError("theorem_A_bound needs Q >= 1");
  const double k = kappa(m, D).get_d();
  return k / (M_PI * std::sqrt(static_cast<double>(D))) *
         std::pow(Q, static_cast<double>(m) - 1.0) * std::log(Q);
}

Report census_report(unsigned m, std::optional<std::int64_t> D, const std::vector<Rat>& q_grid,
                     const EnumerateOptions& opts) {
  if (q_grid.empty()) throw DomainError("empty Q grid");
  if (!std::is_sorted(q_grid.begin(), q_grid.end())) throw DomainError("Q grid must ascend");

  CensusQuery query{m, D, q_grid.back()};
  const auto entries = enumerate_salem(query, opts);

  Report report({"m", "D", "Q", "count", "paper_term", "abs_error", "ratio", "polynomials"});
  report.mark_json_only("polynomials");

  for (const Rat& q : q_grid) {
    std::uint64_t count = 0;
    std::vector<std::string> polys;
    for (const auto& e : entries) {
      // Exact boundary test against this grid point, not the float lambda.
      if (salem_lambda_at_most(trace_polynomial(e.poly), q)) {
        ++count;
        polys.push_back(e.poly.to_string());
      }
    }
    double term = 0.0;
    if (D) {
      term = (q >= 1) ? theorem_A_bound(m, *D, q.get_d()) : 0.0;
    } else {
      term = omega(m).get_d() * std::pow(q.get_d(), static_cast<double>(m));
    }
    term = round15(term);
    const double err = round15(std::abs(static_cast<double>(count) - term));
    Report::Cell ratio = std::monostate{};
    if (term > 0) ratio = round15(static_cast<double>(count) / term);
    Report::Cell d_cell = std::monostate{};
    if (D) d_cell = *D;
    report.add_row({static_cast<std::int64_t>(m), d_cell, rational_to_string(q), count, term, err,
                    ratio, std::move(polys)});
  }
  return report;
}

}  // namespace salem
