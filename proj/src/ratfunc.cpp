#include "ratsol/ratfunc.hpp"

namespace ratsol {

QRatFn log_derivative(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("log derivative of the zero polynomial");
  return QRatFn(p.derivative(), p);
}

QRatFn z_times(const Rational& c) { return QRatFn(QPoly::monomial(c, 1)); }

ERatFn substitute_scaled(const QRatFn& r, long k) {
  // z -> cz is an automorphism, so coprimality survives.
  return ERatFn::from_coprime(substitute_scaled(r.num(), k), substitute_scaled(r.den(), k));
}

namespace {

template <class R>
std::string render(const R& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

}  // namespace

std::string to_string(const QRatFn& r) { return render(r); }
std::string to_string(const ERatFn& r) { return render(r); }

}  // namespace ratsol
