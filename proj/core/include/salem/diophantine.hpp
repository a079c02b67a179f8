#pragma once

#include <cstdint>
#include <vector>

#include "salem/arith.hpp"

namespace salem {

/// Integer solution of A^2 + D B^2 = C^2 with gcd(|A|, |C|) = 1.
struct DiophantineTriple {
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;
  std::int64_t D = 1;

  friend bool operator==(const DiophantineTriple&, const DiophantineTriple&) = default;
  friend auto operator<=>(const DiophantineTriple& x, const DiophantineTriple& y) {
    if (auto c = x.A <=> y.A; c != 0) return c;
    if (auto c = x.B <=> y.B; c != 0) return c;
    return x.C <=> y.C;
  }
};

/// Normal form of a positive primitive solution:
/// (A,B,C) = (D2 v^2 - D1 u^2, 2uv, D1 u^2 + D2 v^2) / tau.
struct PrimitiveParams {
  std::int64_t D1 = 1;
  std::int64_t D2 = 1;
  std::int64_t u = 0;
  std::int64_t v = 0;
  int tau = 1;  // 2 only when u, v are both odd (and D is odd)
};

/// The triple produced by params; requires the PrimitiveParams invariants.
DiophantineTriple triple_from_params(std::int64_t D, const PrimitiveParams& p);

/// Exact count of (A,B,C) with A^2 + D B^2 = C^2, |C| <= X, gcd(|A|,|C|) = 1,
/// by a B-then-C sweep with an exact perfect-square test.
std::uint64_t brute_force_primitive_count(std::int64_t D, std::int64_t X);

/// All solutions with |C| <= X, via the divisor/coprime-pair parametrization,
/// closed under sign flips, deduplicated, sorted.
std::vector<DiophantineTriple> generate_primitive_solutions(std::int64_t D, std::int64_t X);

/// |generate_primitive_solutions(D, X)| without materializing the sign orbits.
std::uint64_t parametrized_primitive_count(std::int64_t D, std::int64_t X);

/// 2^t * 8X / (pi sqrt(D)) for odd D, 2^t * 6X / (pi sqrt(D)) for even D.
double asymptotic_main_term(std::int64_t D, double X);

struct ConvexRegion {
  enum class Kind { unit_disk, ellipse_sector };
  Kind kind = Kind::unit_disk;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  double bounding_radius = 1.0;

  static ConvexRegion unit_disk();
  /// {x,y >= 0, d1 x^2 + d2 y^2 <= 1, d1 x^2 <= d2 y^2}, area pi / (8 sqrt(d1 d2)).
  static ConvexRegion ellipse_sector(std::int64_t d1, std::int64_t d2);

  double volume() const;
  /// Exact membership of (x/alpha, y/alpha).
  bool contains_scaled(const Int& x, const Int& y, const Rat& alpha) const;
};

enum class LatticeVariant { all, odd, primitive, odd_primitive };

/// Exact lattice-point count of alpha * region over the named sublattice.
std::uint64_t lattice_count(const ConvexRegion& region, const Rat& alpha, LatticeVariant variant);

/// alpha^2 vol(C) scaled by 1, 1/4, 6/pi^2 or 2/pi^2.
double lattice_main_term(const ConvexRegion& region, double alpha, LatticeVariant variant);

/// Nonnegative solutions of a1 x1 + ... + an xn = N, exact (dynamic programming).
Int count_linear_nonneg(const std::vector<std::uint64_t>& coeffs, std::uint64_t N);

/// N^{n-1} / (a1...an (n-1)!).
double partition_main_term(const std::vector<std::uint64_t>& coeffs, std::uint64_t N);

}  // namespace salem
