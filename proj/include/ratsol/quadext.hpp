#pragma once

#include <stdexcept>
#include <string>

#include "ratsol/rational.hpp"

namespace ratsol {

struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// a + b*c with c^2 = radicand. A radicand of 0 marks an element of Q that has
// not been bound to a field yet; it adopts the radicand of any bound operand.
class QuadExt {
 public:
  QuadExt() = default;
  explicit QuadExt(Rational a) : a_(std::move(a)) {}
  QuadExt(Rational a, Rational b, Rational radicand);

  static QuadExt generator(const Rational& radicand) { return QuadExt(0, 1, radicand); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  const Rational& radicand() const { return d_; }
  bool bound() const { return sgn(d_) != 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadExt conjugate() const { return QuadExt(a_, -b_, d_, Unchecked{}); }
  QuadExt inverse() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }
  QuadExt operator-() const { return QuadExt(-a_, -b_, d_, Unchecked{}); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  // Equality is value equality; comparing elements of different fields throws.
  friend bool operator==(const QuadExt& x, const QuadExt& y);

 private:
  struct Unchecked {};
  QuadExt(Rational a, Rational b, Rational d, Unchecked)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}
  // Radicand of the result of combining *this with o.
  const Rational& joint_radicand(const QuadExt& o) const;

  Rational a_{0}, b_{0}, d_{0};
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline QuadExt zero_like(const QuadExt& x) { return QuadExt(0, 0, x.radicand()); }
inline QuadExt one_like(const QuadExt& x) { return QuadExt(1, 0, x.radicand()); }
std::string to_string(const QuadExt& x);

}  // namespace ratsol
