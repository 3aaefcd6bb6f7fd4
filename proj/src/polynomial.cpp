#include "ratsol/polynomial.hpp"

#include <sstream>

#include "ratsol/detail/zpoly.hpp"

namespace ratsol {

using detail::ZPoly;

detail::ZCleared detail::zclear(const QPoly& p) {
  ZCleared out{{}, 1};
  for (const auto& c : p.coefficients())
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
  out.z.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational& c = p[i];
    mpz_divexact(out.z[i].get_mpz_t(), out.den.get_mpz_t(), c.get_den_mpz_t());
    out.z[i] *= c.get_num();
  }
  return out;
}

namespace {

using Cleared = detail::ZCleared;
Cleared clear(const QPoly& p) { return detail::zclear(p); }

QPoly from_z(const ZPoly& z, const Integer& den) {
  std::vector<Rational> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    v[i] = Rational(z[i], den);
    v[i].canonicalize();
  }
  return QPoly(std::move(v));
}

QPoly monic_from_z(const ZPoly& z) {
  if (z.empty()) return {};
  return from_z(z, z.back());
}

}  // namespace

QPoly multiply(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Cleared ca = clear(a), cb = clear(b);
  return from_z(detail::zmul(ca.z, cb.z), ca.den * cb.den);
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly(), a};
  // Work with a monic integer-scaled divisor to avoid rational blowup:
  // a = za/da, b = zb/db. Pseudo-divide za by zb, then rescale.
  Cleared ca = clear(a), cb = clear(b);
  const ZPoly& zb = cb.z;
  const std::size_t db = zb.size() - 1;
  const std::size_t steps = ca.z.size() - db;
  ZPoly r = ca.z;
  ZPoly q(steps);
  const Integer& lc = zb.back();
  // r <- lc^steps * za - q * zb, tracked with q scaled accordingly.
  Integer scale = 1;
  for (std::size_t i = steps; i-- > 0;) {
    mpz_class top = r[i + db];
    if (sgn(top) == 0) continue;
    if (mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) {
      mpz_class f;
      mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), f.get_mpz_t(), zb[j].get_mpz_t());
      q[i] += f;
    } else {
      for (auto& c : r) c *= lc;
      for (auto& c : q) c *= lc;
      scale *= lc;
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), top.get_mpz_t(), zb[j].get_mpz_t());
      q[i] += top;
    }
  }
  r.resize(db);
  detail::ztrim(r);
  detail::ztrim(q);
  // scale * za = q * zb + r  =>  a = (q db / (scale da)) b + r / (scale da)
  Integer qden = scale * ca.den;
  std::vector<Rational> qv(q.size()), rv(r.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    qv[i] = Rational(q[i] * cb.den, qden);
    qv[i].canonicalize();
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    rv[i] = Rational(r[i], qden);
    rv[i].canonicalize();
  }
  return {QPoly(std::move(qv)), QPoly(std::move(rv))};
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return {};
  Cleared ca = clear(a), cb = clear(b);
  mpz_class cont = detail::zcontent(cb.z);
  if (sgn(cb.z.back()) < 0) cont = -cont;
  ZPoly pb = detail::zprimitive(cb.z);
  // a/b = (za/da) / (cont*pb/db) = (za/pb) * db / (da*cont)
  auto q = detail::zexact_div(ca.z, pb);
  if (!q) throw std::domain_error("inexact polynomial division");
  Integer den = ca.den * cont;
  std::vector<Rational> v(q->size());
  for (std::size_t i = 0; i < q->size(); ++i) {
    v[i] = Rational((*q)[i] * cb.den, den);
    v[i].canonicalize();
  }
  return QPoly(std::move(v));
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  return monic_from_z(detail::zgcd(clear(a).z, clear(b).z));
}

QPoly squarefree_part(const QPoly& p) {
  if (p.is_constant()) return p.is_zero() ? p : QPoly::constant(Rational(1));
  QPoly g = gcd(p, p.derivative());
  return make_monic(exact_quotient(p, g));
}

Rational scaled_radicand(long k) {
  if (k == 0) throw std::invalid_argument("scaling needs k != 0");
  return Rational(-1, 2 * k);
}

EPoly lift(const QPoly& p, const Rational& radicand) {
  std::vector<QuadExt> v;
  v.reserve(p.size());
  for (const auto& c : p.coefficients()) v.emplace_back(c, 0, radicand);
  return EPoly(std::move(v));
}

std::pair<QPoly, QPoly> split(const EPoly& p) {
  std::vector<Rational> a(p.size()), b(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    a[i] = p[i].rational_part();
    b[i] = p[i].radical_part();
  }
  return {QPoly(std::move(a)), QPoly(std::move(b))};
}

bool is_rational(const EPoly& p) {
  for (const auto& c : p.coefficients())
    if (!c.is_rational()) return false;
  return true;
}

namespace {

Rational radicand_of(const EPoly& p) {
  for (const auto& c : p.coefficients())
    if (c.bound()) return c.radicand();
  return 0;
}

Rational joint_radicand(const EPoly& a, const EPoly& b) {
  Rational da = radicand_of(a), db = radicand_of(b);
  if (sgn(da) == 0) return db;
  if (sgn(db) != 0 && da != db) throw FieldMismatch("polynomials over different extensions");
  return da;
}

EPoly join(const QPoly& a, const QPoly& b, const Rational& radicand) {
  std::size_t n = std::max(a.size(), b.size());
  std::vector<QuadExt> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(radicand) == 0)
      v.emplace_back(a.coefficient(i));
    else
      v.emplace_back(a.coefficient(i), b.coefficient(i), radicand);
  }
  return EPoly(std::move(v));
}

}  // namespace

EPoly multiply(const EPoly& a, const EPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Rational d = joint_radicand(a, b);
  auto [a0, a1] = split(a);
  auto [b0, b1] = split(b);
  QPoly re = a0 * b0;
  QPoly im;
  if (!a1.is_zero() && !b1.is_zero()) re += (a1 * b1).scaled(d);
  if (!b1.is_zero()) im += a0 * b1;
  if (!a1.is_zero()) im += a1 * b0;
  return join(re, im, d);
}

std::pair<EPoly, EPoly> divmod(const EPoly& a, const EPoly& b) {
  if (!is_rational(b)) return divmod<QuadExt>(a, b);
  const Rational d = joint_radicand(a, b);
  const QPoly b0 = split(b).first;
  auto [a0, a1] = split(a);
  auto [q0, r0] = divmod(a0, b0);
  auto [q1, r1] = divmod(a1, b0);
  return {join(q0, q1, d), join(r0, r1, d)};
}

EPoly exact_quotient(const EPoly& a, const EPoly& b) {
  if (!is_rational(b)) return exact_quotient<QuadExt>(a, b);
  const Rational d = joint_radicand(a, b);
  const QPoly b0 = split(b).first;
  auto [a0, a1] = split(a);
  return join(exact_quotient(a0, b0), a1.is_zero() ? QPoly() : exact_quotient(a1, b0), d);
}

EPoly gcd(const EPoly& a, const EPoly& b) {
  Rational d = joint_radicand(a, b);
  if (is_rational(a) && is_rational(b)) return lift(gcd(split(a).first, split(b).first), d);
  // Euclid over the field.
  EPoly x = a, y = b;
  while (!y.is_zero()) {
    EPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  EPoly m = make_monic(x);
  return sgn(d) == 0 ? m : join(split(m).first, split(m).second, d);
}

EPoly substitute_scaled(const QPoly& p, long k) {
  const Rational d = scaled_radicand(k);
  std::vector<QuadExt> v;
  v.reserve(p.size());
  Rational even_power = 1;  // d^{floor(j/2)}
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j > 0 && j % 2 == 0) even_power *= d;
    if (j % 2 == 0)
      v.emplace_back(p[j] * even_power, 0, d);
    else
      v.emplace_back(0, p[j] * even_power, d);
  }
  return EPoly(std::move(v));
}

namespace {

template <class S>
std::string render(const Polynomial<S>& p, auto coeff_text) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (is_zero(p[i])) continue;
    std::string c = coeff_text(p[i]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != "1") out << c << "*";
    out << "z";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace

std::string to_string(const QPoly& p) {
  return render(p, [](const Rational& c) { return to_string(c); });
}

std::string to_string(const EPoly& p) {
  return render(p, [](const QuadExt& c) {
    if (c.is_rational()) return to_string(c.rational_part());
    return "(" + to_string(c) + ")";
  });
}

}  // namespace ratsol
