#include "ratsol/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ratsol {

Mp::Mp(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}
Mp::Mp(const Mp& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Mp::Mp(Mp&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}
Mp& Mp::operator=(const Mp& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Mp& Mp::operator=(Mp&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Mp::~Mp() { mpfr_clear(v_); }

Mp Mp::from(const Rational& q, mpfr_prec_t prec) {
  Mp x(prec);
  mpfr_set_q(x.v_, q.get_mpq_t(), MPFR_RNDN);
  return x;
}
Mp Mp::from(double d, mpfr_prec_t prec) {
  Mp x(prec);
  mpfr_set_d(x.v_, d, MPFR_RNDN);
  return x;
}
Mp& Mp::operator+=(const Mp& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Mp& Mp::operator-=(const Mp& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Mp& Mp::operator*=(const Mp& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Mp& Mp::operator/=(const Mp& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Mp Mp::operator-() const {
  Mp x(*this);
  mpfr_neg(x.v_, x.v_, MPFR_RNDN);
  return x;
}

BigComplex BigComplex::from(std::complex<double> z, mpfr_prec_t prec) {
  return {Mp::from(z.real(), prec), Mp::from(z.imag(), prec)};
}
Mp BigComplex::norm() const { return re * re + im * im; }
Mp BigComplex::abs() const {
  Mp n = norm();
  mpfr_sqrt(n.get(), n.get(), MPFR_RNDN);
  return n;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  Mp n = b.norm();
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

std::vector<std::complex<double>> RootSet::as_double() const {
  std::vector<std::complex<double>> out;
  for (const auto& r : roots) out.push_back(r.to_complex());
  return out;
}

namespace {

using cd = std::complex<double>;

std::vector<Mp> to_mp(const QPoly& p, mpfr_prec_t prec) {
  std::vector<Mp> c;
  c.reserve(p.size());
  for (const auto& x : p.coefficients()) c.push_back(Mp::from(x, prec));
  return c;
}

// p(z) and p'(z) by Horner.
void horner2(const std::vector<Mp>& c, const BigComplex& z, BigComplex& val, BigComplex& der) {
  const mpfr_prec_t prec = z.precision();
  val = BigComplex(prec);
  der = BigComplex(prec);
  for (std::size_t i = c.size(); i-- > 0;) {
    der = der * z + val;
    val = val * z;
    val.re += c[i];
  }
}

void horner2(const std::vector<double>& c, cd z, cd& val, cd& der) {
  val = 0;
  der = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    der = der * z + val;
    val = val * z + c[i];
  }
}

bool finite(const std::vector<double>& c) {
  for (double x : c)
    if (!std::isfinite(x)) return false;
  return true;
}

// Aberth sweep in place; returns the largest relative correction.
double aberth_step(const std::vector<double>& c, std::vector<cd>& z) {
  double worst = 0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    cd v, d;
    horner2(c, z[j], v, d);
    if (v == cd(0)) continue;
    cd ratio = v / d;
    cd s = 0;
    for (std::size_t l = 0; l < z.size(); ++l)
      if (l != j) s += 1.0 / (z[j] - z[l]);
    cd w = ratio / (1.0 - ratio * s);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
    z[j] -= w;
    worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[j])));
  }
  return worst;
}

double aberth_step(const std::vector<Mp>& c, std::vector<BigComplex>& z) {
  double worst = 0;
  const mpfr_prec_t prec = z[0].precision();
  BigComplex v(prec), d(prec);
  const Mp one = Mp::from(1.0, prec);
  for (std::size_t j = 0; j < z.size(); ++j) {
    horner2(c, z[j], v, d);
    if (mpfr_zero_p(v.re.get()) && mpfr_zero_p(v.im.get())) continue;
    if (mpfr_zero_p(d.re.get()) && mpfr_zero_p(d.im.get())) continue;
    BigComplex ratio = v / d;
    BigComplex s(prec);
    for (std::size_t l = 0; l < z.size(); ++l) {
      if (l == j) continue;
      BigComplex diff = z[j] - z[l];
      s = s + BigComplex(one, Mp(prec)) / diff;
    }
    BigComplex den = BigComplex(one, Mp(prec)) - ratio * s;
    BigComplex w = ratio / den;
    if (!mpfr_number_p(w.re.get()) || !mpfr_number_p(w.im.get())) continue;
    z[j] = z[j] - w;
    const double rel = w.abs().to_double() / std::max(1.0, z[j].abs().to_double());
    worst = std::max(worst, rel);
  }
  return worst;
}

}  // namespace

BigComplex evaluate(const QPoly& p, const BigComplex& z) {
  BigComplex val(z.precision()), der(z.precision());
  horner2(to_mp(p, z.precision()), z, val, der);
  return val;
}

RootSet complex_roots(const QPoly& p, int precision_bits, std::uint64_t seed) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (precision_bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  const mpfr_prec_t prec = precision_bits;
  RootSet out;
  out.source_degree = p.degree();

  // Split off z^m exactly.
  std::size_t m = 0;
  while (m < p.size() && p[m] == 0) ++m;
  std::vector<Rational> rest(p.coefficients().begin() + static_cast<long>(m), p.coefficients().end());
  const QPoly q(std::move(rest));
  std::vector<BigComplex> roots;
  for (std::size_t i = 0; i < m; ++i) roots.emplace_back(prec);

  const long d = q.degree();
  if (d > 0) {
    const QPoly monic = make_monic(q);
    std::vector<Mp> cm = to_mp(monic, prec);
    std::vector<double> cd_coeffs;
    for (const auto& x : cm) cd_coeffs.push_back(x.to_double());

    // Start on a circle with the geometric mean of the root moduli.
    const double rho = std::pow(std::abs(mpfr_get_d(cm[0].get(), MPFR_RNDN)), 1.0 / static_cast<double>(d));
    const double radius = (std::isfinite(rho) && rho > 0) ? rho : 1.0;
    std::vector<cd> z;
    const double phase = 0.4 + 2 * M_PI * static_cast<double>(seed % 9973) / 9973.0 / static_cast<double>(d);
    for (long j = 0; j < d; ++j) z.push_back(std::polar(radius, 2 * M_PI * static_cast<double>(j) / d + phase));

    if (finite(cd_coeffs)) {
      for (int it = 0; it < 500; ++it)
        if (aberth_step(cd_coeffs, z) < 1e-14) break;
    }
    std::vector<BigComplex> zz;
    for (const auto& x : z) zz.push_back(BigComplex::from(x, prec));
    const double target = std::ldexp(1.0, -(precision_bits - 16));
    double last = 1e300;
    int stalled = 0;
    for (int it = 0; it < 400 && stalled < 6; ++it) {
      const double worst = aberth_step(cm, zz);
      if (worst < target) break;
      stalled = worst >= last * 0.9 ? stalled + 1 : 0;
      last = std::min(last, worst);
    }
    // Backward-error acceptance: each root solves a relative 2^(-P/2) perturbation.
    bool converged = true;
    for (const auto& r : zz) converged = converged && is_numeric_root(monic, r);
    out.converged = converged;
    for (auto& r : zz) roots.push_back(std::move(r));
  }

  std::sort(roots.begin(), roots.end(), [](const BigComplex& a, const BigComplex& b) {
    const int c = mpfr_cmp(a.re.get(), b.re.get());
    if (c != 0) return c < 0;
    return mpfr_cmp(a.im.get(), b.im.get()) < 0;
  });

  // Residual bound relative to the largest coefficient.
  Mp maxc(prec);
  for (const auto& c : p.coefficients()) {
    Mp a = Mp::from(c, prec);
    mpfr_abs(a.get(), a.get(), MPFR_RNDN);
    if (maxc < a) maxc = a;
  }
  double bound = 0;
  for (const auto& r : roots) {
    const double rel = (evaluate(p, r).abs() / maxc).to_double();
    bound = std::max(bound, rel);
  }
  out.residual_bound = bound;
  out.roots = std::move(roots);
  if (!out.converged) throw NonConvergence("Aberth iteration did not converge", out);
  return out;
}

bool is_numeric_root(const QPoly& p, const BigComplex& zeta) {
  if (p.is_zero()) return true;
  const mpfr_prec_t prec = zeta.precision();
  // Compare |p(zeta)| with the magnitude scale sum |c_i| |zeta|^i.
  Mp scale(prec), power = Mp::from(1.0, prec);
  const Mp r = zeta.abs();
  for (const auto& c : p.coefficients()) {
    Mp a = Mp::from(c, prec);
    mpfr_abs(a.get(), a.get(), MPFR_RNDN);
    scale += a * power;
    power *= r;
  }
  Mp v = evaluate(p, zeta).abs();
  Mp threshold = scale;
  mpfr_mul_2si(threshold.get(), threshold.get(), -static_cast<long>(prec) / 2, MPFR_RNDN);
  return !(threshold < v);
}

namespace {

// Taylor coefficients of p at zeta: p(zeta + t) = sum c_j t^j, j < count.
std::vector<BigComplex> taylor(const QPoly& p, const BigComplex& zeta, std::size_t count) {
  const mpfr_prec_t prec = zeta.precision();
  std::vector<BigComplex> c;
  for (const auto& x : p.coefficients()) c.emplace_back(Mp::from(x, prec), Mp(prec));
  std::vector<BigComplex> out;
  // Repeated synthetic division by (z - zeta).
  for (std::size_t j = 0; j < count; ++j) {
    if (c.empty()) {
      out.emplace_back(prec);
      continue;
    }
    BigComplex acc(prec);
    std::vector<BigComplex> quotient;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * zeta + c[i];
      if (i > 0) quotient.push_back(acc);
    }
    out.push_back(acc);
    std::reverse(quotient.begin(), quotient.end());
    c = std::move(quotient);
  }
  return out;
}

std::vector<BigComplex> series_mul(const std::vector<BigComplex>& a, const std::vector<BigComplex>& b, std::size_t n) {
  const mpfr_prec_t prec = a[0].precision();
  std::vector<BigComplex> r(n, BigComplex(prec));
  for (std::size_t i = 0; i < n && i < a.size(); ++i)
    for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  return r;
}

// Coefficients of (z - zeta) w(z) around zeta, order < n. Throws on a non-simple pole.
std::vector<BigComplex> regular_part(const QRatFn& w, const BigComplex& zeta, std::size_t n) {
  auto num = taylor(w.num(), zeta, n);
  auto den = taylor(w.den(), zeta, n + 1);
  // den(zeta + t) / t, dropping the vanishing constant term.
  std::vector<BigComplex> d(den.begin() + 1, den.end());
  const mpfr_prec_t prec = zeta.precision();
  Mp scale(prec);
  for (const auto& x : den) scale = scale < x.abs() ? x.abs() : scale;
  Mp tiny = scale;
  mpfr_mul_2si(tiny.get(), tiny.get(), -static_cast<long>(prec) / 4, MPFR_RNDN);
  if (d[0].abs() < tiny) throw NonSimplePole("pole is not simple within tolerance");
  // Power series division num / d.
  std::vector<BigComplex> q;
  for (std::size_t j = 0; j < n; ++j) {
    BigComplex acc = num[j];
    for (std::size_t i = 0; i < j; ++i) acc = acc - q[i] * d[j - i];
    q.push_back(acc / d[0]);
  }
  return q;
}

}  // namespace

BigComplex numeric_residue(const QRatFn& w, const BigComplex& zeta) {
  if (!is_numeric_root(w.den(), zeta)) return BigComplex(zeta.precision());
  // Deflate: den = (z - zeta) Q(z); residue = num(zeta) / Q(zeta).
  const mpfr_prec_t prec = zeta.precision();
  BigComplex acc(prec), qval(prec);
  for (std::size_t i = w.den().size(); i-- > 0;) {
    acc = acc * zeta + BigComplex(Mp::from(w.den()[i], prec), Mp(prec));
    if (i > 0) qval = qval * zeta + acc;
  }
  Mp scale(prec);
  for (const auto& c : w.den().coefficients()) {
    Mp a = Mp::from(c, prec);
    mpfr_abs(a.get(), a.get(), MPFR_RNDN);
    if (scale < a) scale = a;
  }
  Mp tiny = scale;
  mpfr_mul_2si(tiny.get(), tiny.get(), -static_cast<long>(prec) / 4, MPFR_RNDN);
  if (qval.abs() < tiny) throw NonSimplePole("pole is not simple within tolerance");
  return evaluate(w.num(), zeta) / qval;
}

BigComplex residue_of_power(const QRatFn& w, const BigComplex& zeta, long power) {
  if (power < 1) throw std::invalid_argument("power must be positive");
  const std::size_t n = static_cast<std::size_t>(power);
  auto s = regular_part(w, zeta, n);
  std::vector<BigComplex> acc = s;
  for (long i = 1; i < power; ++i) acc = series_mul(acc, s, n);
  return acc[n - 1];
}

std::string export_zeros(const QPoly& p, ZeroFormat format, int precision_bits, std::uint64_t seed) {
  return export_zeros(complex_roots(p, precision_bits, seed), format);
}

std::string export_zeros(const RootSet& set, ZeroFormat format) {
  std::vector<std::complex<double>> pts;
  for (const auto& r : set.roots) {
    double re = r.re.to_double(), im = r.im.to_double();
    const double scale = 1.0 + std::abs(re);
    if (std::abs(im) < 1e-30 * scale) im = 0.0;
    if (std::abs(re) < 1e-30 * (1.0 + std::abs(im))) re = 0.0;
    pts.emplace_back(re, im);
  }
  char buf[128];
  std::ostringstream out;
  if (format == ZeroFormat::csv) {
    out << "re,im\n";
    for (const auto& z : pts) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
      out << buf;
    }
    return out.str();
  }
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  for (const auto& z : pts) {
    lo_x = std::min(lo_x, z.real());
    hi_x = std::max(hi_x, z.real());
    lo_y = std::min(lo_y, z.imag());
    hi_y = std::max(hi_y, z.imag());
  }
  const double span = std::max(hi_x - lo_x, hi_y - lo_y);
  const double cx = (lo_x + hi_x) / 2, cy = (lo_y + hi_y) / 2;
  const double unit = 720.0 / span;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" width=\"800\" height=\"800\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<line x1=\"0\" y1=\"%.3f\" x2=\"800\" y2=\"%.3f\" stroke=\"#bbb\"/>\n",
                400 + cy * unit, 400 + cy * unit);
  out << buf;
  std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"0\" x2=\"%.3f\" y2=\"800\" stroke=\"#bbb\"/>\n",
                400 - cx * unit, 400 - cx * unit);
  out << buf;
  for (const auto& z : pts) {
    const double x = 400 + (z.real() - cx) * unit;
    const double y = 400 - (z.imag() - cy) * unit;
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\"/>\n", x, y);
    out << buf;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ratsol
