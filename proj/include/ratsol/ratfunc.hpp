#pragma once

#include <string>
#include <utility>

#include "ratsol/polynomial.hpp"

namespace ratsol {

// num/den with gcd(num, den) = 1 and den monic. Zero is 0/1.
template <class S>
class RationalFunction {
 public:
  using Poly = Polynomial<S>;

  RationalFunction() : den_(Poly::constant(S(Rational(1)))) {}
  explicit RationalFunction(Poly p) : num_(std::move(p)), den_(unit_like(num_)) {}
  RationalFunction(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
    assign_normalized(std::move(num), std::move(den));
  }
  // Caller guarantees gcd(num, den) = 1.
  static RationalFunction from_coprime(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFunction r;
    r.assign_normalized(std::move(num), std::move(den));
    return r;
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator-() const { return from_coprime(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return combine(x, y, false);
  }
  friend RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return combine(x, y, true);
  }
  friend RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    if (x.is_zero() || y.is_zero()) return RationalFunction();
    Poly g1 = gcd(x.num_, y.den_), g2 = gcd(y.num_, x.den_);
    Poly xn = g1.degree() > 0 ? exact_quotient(x.num_, g1) : x.num_;
    Poly yd = g1.degree() > 0 ? exact_quotient(y.den_, g1) : y.den_;
    Poly yn = g2.degree() > 0 ? exact_quotient(y.num_, g2) : y.num_;
    Poly xd = g2.degree() > 0 ? exact_quotient(x.den_, g2) : x.den_;
    return from_coprime(xn * yn, xd * yd);
  }
  friend RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    if (y.is_zero()) throw std::domain_error("division by the zero rational function");
    return x * from_coprime(y.den_, y.num_);
  }
  friend bool operator==(const RationalFunction& x, const RationalFunction& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  RationalFunction scaled(const S& s) const { return from_coprime(num_.scaled(s), den_); }

  RationalFunction derivative() const {
    if (is_polynomial()) return from_coprime(num_.derivative(), den_);
    // (n/d)' = (n' d1 - n dd1) / (d d1) where d = g d1, d' = g dd1.
    Poly dd = den_.derivative();
    Poly g = gcd(den_, dd);
    Poly d1 = exact_quotient(den_, g);
    Poly dd1 = exact_quotient(dd, g);
    // Poles of order m become order m+1, so d * d1 is already exact.
    Poly top = num_.derivative() * d1 - num_ * dd1;
    return from_coprime(std::move(top), den_ * d1);
  }

 private:
  static Poly unit_like(const Poly& p) {
    return Poly::constant(p.is_zero() ? S(Rational(1)) : one_like(p.leading()));
  }
  void assign_normalized(Poly num, Poly den) {
    if (num.is_zero()) {
      num_ = Poly();
      den_ = Poly::constant(one_like(den.leading()));
      return;
    }
    const S& lc = den.leading();
    if (lc == one_like(lc)) {
      num_ = std::move(num);
      den_ = std::move(den);
      return;
    }
    S inv = one_like(lc) / lc;
    num_ = num.scaled(inv);
    den_ = den.scaled(inv);
  }

  static RationalFunction combine(const RationalFunction& x, const RationalFunction& y, bool subtract) {
    if (y.is_zero()) return x;
    if (x.is_zero()) return subtract ? -y : y;
    if (x.den_ == y.den_) {
      Poly n = subtract ? x.num_ - y.num_ : x.num_ + y.num_;
      return RationalFunction(std::move(n), x.den_);
    }
    Poly g = gcd(x.den_, y.den_);
    if (g.degree() <= 0) {
      Poly n = subtract ? x.num_ * y.den_ - y.num_ * x.den_ : x.num_ * y.den_ + y.num_ * x.den_;
      return from_coprime(std::move(n), x.den_ * y.den_);
    }
    Poly xd = exact_quotient(x.den_, g), yd = exact_quotient(y.den_, g);
    Poly n = subtract ? x.num_ * yd - y.num_ * xd : x.num_ * yd + y.num_ * xd;
    // Remaining common factors can only divide g.
    Poly h = gcd(n, g);
    Poly den = xd * y.den_;
    if (h.degree() > 0) {
      n = exact_quotient(n, h);
      den = exact_quotient(den, h);
    }
    return from_coprime(std::move(n), std::move(den));
  }

  Poly num_;
  Poly den_;
};

using QRatFn = RationalFunction<Rational>;
using ERatFn = RationalFunction<QuadExt>;

// p'/p, reduced; throws on the zero polynomial.
QRatFn log_derivative(const QPoly& p);

QRatFn z_times(const Rational& c);  // c*z
ERatFn substitute_scaled(const QRatFn& r, long k);
std::string to_string(const QRatFn& r);
std::string to_string(const ERatFn& r);

}  // namespace ratsol
