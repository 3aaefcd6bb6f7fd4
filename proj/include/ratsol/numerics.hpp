#pragma once

#include <mpfr.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratsol/ratfunc.hpp"

namespace ratsol {

// MPFR value with its own precision.
class Mp {
 public:
  explicit Mp(mpfr_prec_t prec);
  Mp(const Mp& o);
  Mp(Mp&& o) noexcept;
  Mp& operator=(const Mp& o);
  Mp& operator=(Mp&& o) noexcept;
  ~Mp();

  static Mp from(const Rational& q, mpfr_prec_t prec);
  static Mp from(double x, mpfr_prec_t prec);

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  Mp& operator+=(const Mp& o);
  Mp& operator-=(const Mp& o);
  Mp& operator*=(const Mp& o);
  Mp& operator/=(const Mp& o);
  friend Mp operator+(Mp a, const Mp& b) { return a += b; }
  friend Mp operator-(Mp a, const Mp& b) { return a -= b; }
  friend Mp operator*(Mp a, const Mp& b) { return a *= b; }
  friend Mp operator/(Mp a, const Mp& b) { return a /= b; }
  Mp operator-() const;
  friend bool operator<(const Mp& a, const Mp& b) { return mpfr_less_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

struct BigComplex {
  Mp re, im;
  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(Mp r, Mp i) : re(std::move(r)), im(std::move(i)) {}
  static BigComplex from(std::complex<double> z, mpfr_prec_t prec);
  mpfr_prec_t precision() const { return re.precision(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  Mp norm() const;  // |z|^2
  Mp abs() const;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);

struct RootSet {
  std::vector<BigComplex> roots;  // sorted by (re, im)
  double residual_bound = 0;      // max |p(root)| / max |coefficient|
  long source_degree = 0;
  bool converged = true;
  std::vector<std::complex<double>> as_double() const;
};

struct NonConvergence : std::runtime_error {
  NonConvergence(const std::string& what, RootSet partial) : std::runtime_error(what), partial(std::move(partial)) {}
  RootSet partial;
};

// Aberth-Ehrlich in double precision, then refinement at precision_bits.
// Exact zeros at the origin are split off first. The seed fixes the phase of
// the initial circle. Throws NonConvergence.
RootSet complex_roots(const QPoly& p, int precision_bits = 256, std::uint64_t seed = 0);

BigComplex evaluate(const QPoly& p, const BigComplex& z);

struct NonSimplePole : std::domain_error {
  using std::domain_error::domain_error;
};
// lim (z - zeta) w(z) via deflation of the denominator at zeta.
BigComplex numeric_residue(const QRatFn& w, const BigComplex& zeta);
// Residue of w^power at a simple pole zeta of w.
BigComplex residue_of_power(const QRatFn& w, const BigComplex& zeta, long power);
// Whether zeta is (numerically) a root of p.
bool is_numeric_root(const QPoly& p, const BigComplex& zeta);

enum class ZeroFormat { csv, svg };
// CSV: header "re,im", 17 significant digits. SVG: 800x800 scatter.
std::string export_zeros(const QPoly& p, ZeroFormat format, int precision_bits = 256, std::uint64_t seed = 0);
std::string export_zeros(const RootSet& roots, ZeroFormat format);

}  // namespace ratsol
