#include "salem/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "salem/errors.hpp"

namespace salem {

namespace {

void require_squarefree(std::int64_t d) {
  if (d <= 0 || !is_squarefree_int(Int(d)))
    throw DomainError("D must be a positive squarefree integer");
}

void require_desk_scale(std::int64_t x) {
  // Keeps every intermediate product inside int64.
  if (x > 100'000'000) throw DomainError("X beyond the supported enumeration range");
}

/// Sign-orbit size of a nonnegative representative (a, b >= 0, c >= 1).
std::uint64_t orbit_size(std::int64_t a, std::int64_t b) {
  return (a > 0 ? 2u : 1u) * (b > 0 ? 2u : 1u) * 2u;
}

/// Divisor pairs (d1, d2) with d1 * d2 = D, ascending in d1.
std::vector<std::pair<std::int64_t, std::int64_t>> divisor_splits(std::int64_t D) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t d1 = 1; d1 * d1 <= D; ++d1) {
    if (D % d1 == 0) {
      out.emplace_back(d1, D / d1);
      if (d1 != D / d1) out.emplace_back(D / d1, d1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Enumerates the nonnegative primitive representatives (a, b, c) once each,
/// already gcd-checked, and feeds them to sink.
template <typename Sink>
void enumerate_representatives(std::int64_t D, std::int64_t X, Sink&& sink) {
  require_squarefree(D);
  if (X <= 0) return;
  require_desk_scale(X);
  const bool d_odd = (D % 2 != 0);

  for (auto [d1, d2] : divisor_splits(D)) {
    // tau = 1: (A,B,C) = (d2 v^2 - d1 u^2, 2uv, d1 u^2 + d2 v^2), C <= X.
    for (std::int64_t u = 0; d1 * u * u * 2 <= X; ++u) {
      for (std::int64_t v = 1;; ++v) {
        const std::int64_t lhs = d1 * u * u;
        const std::int64_t rhs = d2 * v * v;
        const std::int64_t c = lhs + rhs;
        if (c > X) break;
        if (lhs > rhs) continue;
        if (std::gcd(u, v) != 1) continue;
        // Both u, v odd gives gcd(A, C) = 2 when D is odd (handled by tau = 2).
        if (d_odd && (u % 2 != 0) && (v % 2 != 0)) continue;
        const std::int64_t a = rhs - lhs;
        const std::int64_t b = 2 * u * v;
        if (std::gcd(std::abs(a), c) != 1) continue;  // boundary degenerates
        sink(a, b, c);
      }
    }
    if (d_odd) {
      // tau = 2: u, v odd, (A,B,C) = ((d2 v^2 - d1 u^2)/2, uv, (d1 u^2 + d2 v^2)/2),
      // with 2C = d1 u^2 + d2 v^2 <= 2X.
      for (std::int64_t u = 1; d1 * u * u <= X; u += 2) {
        for (std::int64_t v = 1;; v += 2) {
          const std::int64_t lhs = d1 * u * u;
          const std::int64_t rhs = d2 * v * v;
          if (lhs + rhs > 2 * X) break;
          if (lhs > rhs) continue;
          if (std::gcd(u, v) != 1) continue;
          const std::int64_t a = (rhs - lhs) / 2;
          const std::int64_t b = u * v;
          const std::int64_t c = (lhs + rhs) / 2;
          if (std::gcd(std::abs(a), c) != 1) continue;
          sink(a, b, c);
        }
      }
    }
  }
}

}  // namespace

DiophantineTriple triple_from_params(std::int64_t D, const PrimitiveParams& p) {
  if (p.D1 <= 0 || p.D2 <= 0 || p.D1 * p.D2 != D)
    throw DomainError("params do not factor D");
  if (p.u < 0 || p.v < 0 || std::gcd(p.u, p.v) != 1 || p.D1 * p.u * p.u > p.D2 * p.v * p.v)
    throw DomainError("params violate the normal-form invariants");
  if (p.tau == 2 && (p.u % 2 == 0 || p.v % 2 == 0))
    throw DomainError("tau = 2 needs u and v odd");
  const std::int64_t lhs = p.D1 * p.u * p.u;
  const std::int64_t rhs = p.D2 * p.v * p.v;
  if (p.tau == 2 && (lhs + rhs) % 2 != 0) throw DomainError("tau = 2 needs D1 u^2 + D2 v^2 even");
  return DiophantineTriple{(rhs - lhs) / p.tau, 2 * p.u * p.v / p.tau, (lhs + rhs) / p.tau, D};
}

std::uint64_t brute_force_primitive_count(std::int64_t D, std::int64_t X) {
  require_squarefree(D);
  if (X <= 0) return 0;
  require_desk_scale(X);
  std::uint64_t total = 0;
  for (std::int64_t b = 0; D * b * b <= X * X; ++b) {
    const std::int64_t db2 = D * b * b;
    std::int64_t c = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(db2)));
    while (c * c < db2) ++c;
    if (c < 1) c = 1;
    for (; c <= X; ++c) {
      const std::uint64_t rem = static_cast<std::uint64_t>(c * c - db2);
      std::uint64_t root = 0;
      if (!is_perfect_square_u64(rem, &root)) continue;
      const auto a = static_cast<std::int64_t>(root);
      if (std::gcd(a, c) != 1) continue;
      total += orbit_size(a, b);
    }
  }
  return total;
}

std::vector<DiophantineTriple> generate_primitive_solutions(std::int64_t D, std::int64_t X) {
  std::vector<DiophantineTriple> out;
  enumerate_representatives(D, X, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    const std::int64_t as[] = {a, -a};
    const std::int64_t bs[] = {b, -b};
    const std::int64_t cs[] = {c, -c};
    for (int i = 0; i < (a > 0 ? 2 : 1); ++i)
      for (int j = 0; j < (b > 0 ? 2 : 1); ++j)
        for (int k = 0; k < 2; ++k) out.push_back({as[i], bs[j], cs[k], D});
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t parametrized_primitive_count(std::int64_t D, std::int64_t X) {
  // Representatives can collide across branches only at zero coordinates;
  // dedupe those, then sum the orbit sizes.
  std::uint64_t total = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> degenerate;  // (a,c) with b = 0, or a = 0 as (-1,c)
  enumerate_representatives(D, X, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a == 0 || b == 0) {
      degenerate.emplace_back(a == 0 ? -1 : a, c);
      return;
    }
    total += orbit_size(a, b);
  });
  std::sort(degenerate.begin(), degenerate.end());
  degenerate.erase(std::unique(degenerate.begin(), degenerate.end()), degenerate.end());
  for (auto& [a, c] : degenerate) total += (a == -1) ? orbit_size(0, 1) : orbit_size(a, 0);
  return total;
}

double asymptotic_main_term(std::int64_t D, double X) {
  require_squarefree(D);
  if (X <= 0) return 0.0;
  const unsigned t = distinct_prime_count(static_cast<std::uint64_t>(D));
  const double numer = (D % 2 != 0) ? 8.0 : 6.0;
  return std::ldexp(1.0, static_cast<int>(t)) * numer * X / (M_PI * std::sqrt(static_cast<double>(D)));
}

ConvexRegion ConvexRegion::unit_disk() { return ConvexRegion{Kind::unit_disk, 0, 0, 1.0}; }

ConvexRegion ConvexRegion::ellipse_sector(std::int64_t d1, std::int64_t d2) {
  if (d1 <= 0 || d2 <= 0) throw DomainError("ellipse_sector needs positive parameters");
  const double r = 1.0 / std::sqrt(static_cast<double>(std::min(d1, d2)));
  return ConvexRegion{Kind::ellipse_sector, d1, d2, r};
}

double ConvexRegion::volume() const {
  if (kind == Kind::unit_disk) return M_PI;
  return M_PI / (8.0 * std::sqrt(static_cast<double>(d1) * static_cast<double>(d2)));
}

bool ConvexRegion::contains_scaled(const Int& x, const Int& y, const Rat& alpha) const {
  const Int& p = alpha.get_num();
  const Int& q = alpha.get_den();
  const Int p2 = p * p;
  const Int q2 = q * q;
  if (kind == Kind::unit_disk) {
    return (x * x + y * y) * q2 <= p2;
  }
  if (x < 0 || y < 0) return false;
  const Int ex = d1 * x * x;
  const Int ey = d2 * y * y;
  return ex <= ey && (ex + ey) * q2 <= p2;
}

std::uint64_t lattice_count(const ConvexRegion& region, const Rat& alpha, LatticeVariant variant) {
  if (alpha <= 0) throw DomainError("alpha must be positive");
  const double bound = alpha.get_d() * region.bounding_radius;
  const auto box = static_cast<std::int64_t>(std::floor(bound)) + 1;
  const bool want_odd =
      variant == LatticeVariant::odd || variant == LatticeVariant::odd_primitive;
  const bool want_primitive =
      variant == LatticeVariant::primitive || variant == LatticeVariant::odd_primitive;

  std::uint64_t count = 0;
  for (std::int64_t x = -box; x <= box; ++x) {
    if (want_odd && x % 2 == 0) continue;
    for (std::int64_t y = -box; y <= box; ++y) {
      if (want_odd && y % 2 == 0) continue;
      if (want_primitive && std::gcd(std::abs(x), std::abs(y)) != 1) continue;
      if (region.contains_scaled(Int(x), Int(y), alpha)) ++count;
    }
  }
  return count;
}

double lattice_main_term(const ConvexRegion& region, double alpha, LatticeVariant variant) {
  double scale = 1.0;
  switch (variant) {
    case LatticeVariant::all: scale = 1.0; break;
    case LatticeVariant::odd: scale = 0.25; break;
    case LatticeVariant::primitive: scale = 6.0 / (M_PI * M_PI); break;
    case LatticeVariant::odd_primitive: scale = 2.0 / (M_PI * M_PI); break;
  }
  return scale * alpha * alpha * region.volume();
}

Int count_linear_nonneg(const std::vector<std::uint64_t>& coeffs, std::uint64_t N) {
  if (coeffs.empty()) throw DomainError("need at least one coefficient");
  for (auto a : coeffs)
    if (a == 0) throw DomainError("coefficients must be positive");
  std::vector<Int> ways(N + 1, Int(0));
  ways[0] = 1;
  for (auto a : coeffs) {
    for (std::uint64_t j = a; j <= N; ++j) ways[j] += ways[j - a];
  }
  return ways[N];
}

double partition_main_term(const std::vector<std::uint64_t>& coeffs, std::uint64_t N) {
  if (coeffs.empty()) throw DomainError("need at least one coefficient");
  const std::size_t n = coeffs.size();
  double denom = 1.0;
  for (auto a : coeffs) denom *= static_cast<double>(a);
  for (std::size_t i = 2; i <= n - 1; ++i) denom *= static_cast<double>(i);
  return std::pow(static_cast<double>(N), static_cast<double>(n - 1)) / denom;
}

}  // namespace salem
