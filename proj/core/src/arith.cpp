#include "salem/arith.hpp"

#include <cmath>
#include <stdexcept>

#include "salem/errors.hpp"

namespace salem {

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square_u64(std::uint64_t n, std::uint64_t* root) {
  // Squares end in {0,1,4,9,16,17,25,33,36,41,48,49,57} mod 64; cheap reject first.
  static constexpr std::uint64_t kMask = []() {
    std::uint64_t m = 0;
    for (std::uint64_t i = 0; i < 64; ++i) m |= std::uint64_t{1} << ((i * i) & 63);
    return m;
  }();
  if (!((kMask >> (n & 63)) & 1)) return false;
  const std::uint64_t r = isqrt_u64(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

std::pair<Int, Int> squarefree_part(const Int& n) {
  if (n == 0) throw DomainError("squarefree_part requires a nonzero argument");
  const bool negative = n < 0;
  Int rest = abs(n);
  Int sf = 1;
  Int k = 1;

  auto strip = [&](const Int& d) {
    if (rest % d != 0) return;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e & 1) sf *= d;
    for (unsigned i = 0; i < e / 2; ++i) k *= d;
  };

  strip(Int(2));
  for (Int d = 3; d * d * d <= rest; d += 2) strip(d);

  // What is left has at most two prime factors, each above the cube root:
  // it is 1, p, p*q, or p^2.  Only the last contributes to k.
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t())) {
      Int r;
      mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
      k *= r;
    } else {
      sf *= rest;
    }
  }
  if (negative) sf = -sf;
  return {sf, k};
}

bool is_squarefree_int(const Int& n) {
  if (n == 0) return false;
  return squarefree_part(n).second == 1;
}

unsigned distinct_prime_count(std::uint64_t n) {
  if (n == 0) throw DomainError("distinct_prime_count requires n >= 1");
  unsigned t = 0;
  auto strip = [&](std::uint64_t d) {
    if (n % d == 0) {
      ++t;
      while (n % d == 0) n /= d;
    }
  };
  strip(2);
  for (std::uint64_t d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1) ++t;
  return t;
}

int sign_of(const Rat& q) { return sgn(q); }
int sign_of(const Int& z) { return sgn(z); }

Rat parse_rational(const std::string& token) {
  if (token.empty()) throw DomainError("empty rational token");
  const auto slash = token.find('/');
  const auto dot = token.find('.');
  try {
    if (slash != std::string::npos) {
      Int num(token.substr(0, slash));
      Int den(token.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + token + "'");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    if (dot != std::string::npos) {
      std::string digits = token.substr(0, dot) + token.substr(dot + 1);
      const std::size_t frac_len = token.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        throw DomainError("malformed rational '" + token + "'");
      Int num(digits);
      Int den = 1;
      for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(Int(token));
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational '" + token + "'");
  }
}

std::string rational_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool ext_less(const ExtRat& a, const ExtRat& b) {
  using K = ExtRat::Kind;
  if (a.kind == K::neg_inf) return b.kind != K::neg_inf;
  if (a.kind == K::pos_inf) return false;
  if (b.kind == K::pos_inf) return true;
  if (b.kind == K::neg_inf) return false;
  return a.value < b.value;
}

}  // namespace salem
