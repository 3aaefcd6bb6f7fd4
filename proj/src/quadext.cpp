#include "ratsol/quadext.hpp"

namespace ratsol {

namespace {

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  return mpz_perfect_square_p(r.get_num_mpz_t()) && mpz_perfect_square_p(r.get_den_mpz_t());
}

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(radicand)) {
  if (sgn(d_) == 0) {
    if (sgn(b_) != 0) throw std::invalid_argument("radical part needs a radicand");
    return;
  }
  if (is_rational_square(d_)) throw std::invalid_argument("radicand is a rational square: " + d_.get_str());
}

const Rational& QuadExt::joint_radicand(const QuadExt& o) const {
  if (!bound()) return o.d_;
  if (o.bound() && d_ != o.d_)
    throw FieldMismatch("quadratic extensions differ: " + d_.get_str() + " vs " + o.d_.get_str());
  return d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = joint_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = joint_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational d = joint_radicand(o);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
  } else {
    Rational a = a_ * o.a_ + b_ * o.b_ * d;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  d_ = std::move(d);
  return *this;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in quadratic extension");
  if (sgn(b_) == 0) return QuadExt(1 / a_, 0, d_, Unchecked{});
  Rational norm = a_ * a_ - b_ * b_ * d_;
  return QuadExt(a_ / norm, -b_ / norm, d_, Unchecked{});
}

bool operator==(const QuadExt& x, const QuadExt& y) {
  x.joint_radicand(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::string to_string(const QuadExt& x) {
  if (x.is_rational()) return to_string(x.rational_part());
  std::string s = to_string(x.rational_part()) + " + (" + to_string(x.radical_part()) + ")*c";
  return s;
}

}  // namespace ratsol
