#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ratsol/quadext.hpp"
#include "ratsol/rational.hpp"

namespace ratsol {

// Dense univariate polynomial, coefficients lowest degree first. The zero
// polynomial has no coefficients and degree kZeroDegree.
template <class S>
class Polynomial {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(S c) { return Polynomial(std::vector<S>{std::move(c)}); }
  static Polynomial monomial(S c, std::size_t degree) {
    std::vector<S> v(degree + 1, zero_like(c));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial identity_like(const S& ref) { return monomial(one_like(ref), 1); }

  long degree() const { return c_.empty() ? kZeroDegree : static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<S>& coefficients() const { return c_; }
  std::size_t size() const { return c_.size(); }
  const S& operator[](std::size_t i) const { return c_[i]; }
  S coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : S{}; }
  const S& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial operator-() const {
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(-x);
    return Polynomial(std::move(v), Trimmed{});
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_like(o.c_.back()));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial scaled(const S& s) const {
    if (::ratsol::is_zero(s)) return Polynomial();
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(x * s);
    return Polynomial(std::move(v));
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<S> v;
    v.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * S(Rational(static_cast<long>(i))));
    return Polynomial(std::move(v));
  }

  // Multiplies by z^k.
  Polynomial shifted(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<S> v(k, zero_like(c_[0]));
    v.insert(v.end(), c_.begin(), c_.end());
    return Polynomial(std::move(v), Trimmed{});
  }

  S operator()(const S& x) const {
    if (c_.empty()) return zero_like(x);
    S acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  struct Trimmed {};
  Polynomial(std::vector<S> coeffs, Trimmed) : c_(std::move(coeffs)) {}
  void trim() {
    while (!c_.empty() && ::ratsol::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<S> c_;
};

using QPoly = Polynomial<Rational>;
using EPoly = Polynomial<QuadExt>;

// Multiplication. The rational and extension overloads go through the
// integer kernels; the template is plain schoolbook.
template <class S>
Polynomial<S> multiply(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<S> v(a.size() + b.size() - 1, zero_like(a[0]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) v[i + j] += a[i] * b[j];
  return Polynomial<S>(std::move(v));
}
QPoly multiply(const QPoly& a, const QPoly& b);
EPoly multiply(const EPoly& a, const EPoly& b);

template <class S>
Polynomial<S> operator*(const Polynomial<S>& a, const Polynomial<S>& b) {
  return multiply(a, b);
}

// Division with remainder over a field; throws on a zero divisor.
template <class S>
std::pair<Polynomial<S>, Polynomial<S>> divmod(const Polynomial<S>& a, const Polynomial<S>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<S>(), a};
  std::vector<S> r = a.coefficients();
  const std::size_t db = b.size() - 1;
  std::vector<S> q(r.size() - db, zero_like(r[0]));
  S inv = one_like(b.leading()) / b.leading();
  for (std::size_t i = q.size(); i-- > 0;) {
    S f = r[i + db] * inv;
    if (is_zero(f)) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] -= f * b[j];
    q[i] = std::move(f);
  }
  r.resize(db);
  return {Polynomial<S>(std::move(q)), Polynomial<S>(std::move(r))};
}
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// Quotient a/b when b divides a exactly; throws std::domain_error otherwise.
template <class S>
Polynomial<S> exact_quotient(const Polynomial<S>& a, const Polynomial<S>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}
QPoly exact_quotient(const QPoly& a, const QPoly& b);
// Component-wise over Q when the divisor is rational.
std::pair<EPoly, EPoly> divmod(const EPoly& a, const EPoly& b);
EPoly exact_quotient(const EPoly& a, const EPoly& b);

// Monic greatest common divisor (zero only when both inputs are zero).
QPoly gcd(const QPoly& a, const QPoly& b);
EPoly gcd(const EPoly& a, const EPoly& b);

template <class S>
Polynomial<S> make_monic(const Polynomial<S>& p) {
  if (p.is_zero()) return p;
  return p.scaled(one_like(p.leading()) / p.leading());
}

// p(z) -> p(c z), where c is the generator of Q(c), c^2 = -1/(2k).
EPoly substitute_scaled(const QPoly& p, long k);
Rational scaled_radicand(long k);

EPoly lift(const QPoly& p, const Rational& radicand);
// Splits p = A + c B; the radicand of p (if bound) is returned through the pair.
std::pair<QPoly, QPoly> split(const EPoly& p);
bool is_rational(const EPoly& p);

// p(z)^{*} squarefree part (monic).
QPoly squarefree_part(const QPoly& p);

// Human-readable rendering, e.g. "8*z^3 - 12*z".
std::string to_string(const QPoly& p);
std::string to_string(const EPoly& p);

}  // namespace ratsol
