#include "salem/cyclotomic.hpp"

#include <map>

#include "salem/errors.hpp"

namespace salem {

unsigned euler_phi(unsigned n) {
  if (n == 0) throw DomainError("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic(0)");
  thread_local std::map<unsigned, IntPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Int> xn(n + 1, Int(0));
  xn[0] = -1;
  xn[n] = 1;
  IntPoly acc(std::move(xn));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) acc = *acc.divide_exact(cyclotomic(d));
  }
  cache.emplace(n, acc);
  return acc;
}

std::vector<unsigned> cyclotomic_candidate_indices(unsigned max_totient) {
  std::vector<unsigned> out{1, 2};
  // phi(n) >= sqrt(n/2), so phi(n) <= K forces n <= 2K^2.
  const unsigned cap = 2 * max_totient * max_totient + 2;
  for (unsigned n = 3; n <= cap; ++n) {
    if (euler_phi(n) <= max_totient) out.push_back(n);
  }
  return out;
}

}  // namespace salem
