#include "salem/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "salem/errors.hpp"

namespace salem {

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, unsigned n) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(n + 1, Int(0));
    p.c_[n] = std::move(c);
  }
  return p;
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

Int IntPoly::eval_int(const Int& x) const {
  Int acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const Rat& x) const { return sgn(eval(x)); }

int IntPoly::sign_at(const ExtRat& x) const {
  if (is_zero()) return 0;
  switch (x.kind) {
    case ExtRat::Kind::finite:
      return sign_at(x.value);
    case ExtRat::Kind::pos_inf:
      return sgn(leading());
    case ExtRat::Kind::neg_inf:
      return (degree() % 2 == 0) ? sgn(leading()) : -sgn(leading());
  }
  return 0;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(d));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  const Int g = content();
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& s) const {
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * s;
  return IntPoly(std::move(out));
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return IntPoly{};
  if (degree() < divisor.degree()) return std::nullopt;

  std::vector<Int> rem = c_;
  std::vector<Int> quot(degree() - divisor.degree() + 1, Int(0));
  const auto& d = divisor.c_;
  for (int k = degree() - divisor.degree(); k >= 0; --k) {
    Int& lead = rem[k + divisor.degree()];
    if (lead % d.back() != 0) return std::nullopt;
    Int q = lead / d.back();
    if (q != 0) {
      for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q * d[i];
    }
    quot[k] = std::move(q);
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

bool IntPoly::divisible_by(const IntPoly& divisor) const {
  return divide_exact(divisor).has_value();
}

IntPoly IntPoly::pseudo_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo_rem by zero");
  if (a.degree() < b.degree()) return a;
  const Int lead = abs(b.leading());
  std::vector<Int> rem = a.c_;
  int deg_r = a.degree();
  const int deg_b = b.degree();
  // Multiply the running remainder by |lc(b)| before each reduction step;
  // positive scaling keeps every intermediate sign-faithful.
  while (deg_r >= deg_b) {
    for (auto& c : rem) c *= lead;
    const Int q = rem[deg_r] / b.leading();
    for (int i = 0; i <= deg_b; ++i) rem[deg_r - deg_b + i] -= q * b.c_[i];
    // rem[deg_r] is now exactly zero
    --deg_r;
    while (deg_r >= 0 && rem[deg_r] == 0) --deg_r;
    rem.resize(deg_r + 1);
  }
  return IntPoly(std::move(rem));
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    IntPoly g = a.primitive_part();
    if (g.leading() < 0) g = -g;
    return g;
  }
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    IntPoly r = pseudo_rem(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i].get_str();
  }
  return os.str();
}

bool is_squarefree(const IntPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return IntPoly::gcd(f, f.derivative()).degree() == 0;
}

IntPoly squarefree_part_poly(const IntPoly& f) {
  if (f.is_zero()) return f;
  if (f.degree() == 0) return f;
  const IntPoly g = IntPoly::gcd(f, f.derivative());
  if (g.degree() == 0) return f;
  // g is primitive and divides f over Q, so the cofactor is integral (Gauss).
  return *f.divide_exact(g);
}

namespace {

/// Canonical Sturm chain: p0 = g, p1 = g', then negated pseudo-remainders,
/// content-stripped (positive scalings only).
std::vector<IntPoly> sturm_chain(const IntPoly& g) {
  std::vector<IntPoly> chain;
  chain.push_back(g);
  IntPoly d = g.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain[chain.size() - 1];
    IntPoly r = IntPoly::pseudo_rem(a, b);
    if (r.is_zero()) break;
    chain.push_back((-r).primitive_part());
  }
  return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const ExtRat& x) {
  int variations = 0;
  int prev = 0;
  for (const auto& p : chain) {
    const int s = p.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

}  // namespace

int count_real_roots(const IntPoly& g, const ExtRat& lo, const ExtRat& hi) {
  if (g.is_zero()) throw DomainError("root counting needs a nonzero polynomial");
  if (!ext_less(lo, hi)) throw DomainError("root counting needs lo < hi");
  if (lo.finite() && g.sign_at(lo.value) == 0)
    throw EndpointIsRoot("polynomial vanishes at the lower endpoint");
  if (hi.finite() && g.sign_at(hi.value) == 0)
    throw EndpointIsRoot("polynomial vanishes at the upper endpoint");
  if (g.degree() == 0) return 0;
  const auto chain = sturm_chain(g);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace salem
