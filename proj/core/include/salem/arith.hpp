#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace salem {

using Int = mpz_class;
using Rat = mpq_class;

/// Floor of the square root, exact.
std::uint64_t isqrt_u64(std::uint64_t n);

/// Exact perfect-square test; on success *root holds the nonnegative root.
bool is_perfect_square_u64(std::uint64_t n, std::uint64_t* root = nullptr);

/// n = s * k^2 with s squarefree and sign(s) = sign(n).
/// Trial division up to the cube root, then a perfect-square check on the cofactor.
/// Requires n != 0.
std::pair<Int, Int> squarefree_part(const Int& n);

bool is_squarefree_int(const Int& n);

/// Number of distinct prime factors.  Requires n >= 1.
unsigned distinct_prime_count(std::uint64_t n);

int sign_of(const Rat& q);
int sign_of(const Int& z);

/// Parses "p/q", a plain integer, or a decimal literal ("0.5" -> 1/2) into an exact rational.
Rat parse_rational(const std::string& token);

/// Canonical token: "p" or "p/q".
std::string rational_to_string(const Rat& q);

/// Endpoint of a root-counting interval: a rational or +/-infinity.
struct ExtRat {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Rat value;

  static ExtRat neg_infinity() { return {Kind::neg_inf, Rat()}; }
  static ExtRat pos_infinity() { return {Kind::pos_inf, Rat()}; }
  static ExtRat at(Rat v) { return {Kind::finite, std::move(v)}; }
  bool finite() const { return kind == Kind::finite; }
};

/// Strict order with -inf < finite < +inf.
bool ext_less(const ExtRat& a, const ExtRat& b);

}  // namespace salem
