#include "ratsol/detail/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ratsol::detail {

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

std::size_t zmax_bits(const ZPoly& a) {
  std::size_t m = 0;
  for (const auto& c : a) m = std::max<std::size_t>(m, mpz_sizeinbase(c.get_mpz_t(), 2));
  return m;
}

ZPoly zmul_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  ztrim(r);
  return r;
}

mpz_class zpack(const ZPoly& a, std::size_t slot) {
  if (a.empty()) return 0;
  const std::size_t total = a.size() * slot;
  mpz_class pos, neg;
  mp_limb_t* p = mpz_limbs_write(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mp_limb_t* n = mpz_limbs_write(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  std::fill(p, p + total, mp_limb_t{0});
  std::fill(n, n + total, mp_limb_t{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpz_srcptr c = a[i].get_mpz_t();
    const std::size_t used = mpz_size(c);
    const mp_limb_t* src = mpz_limbs_read(c);
    mp_limb_t* dst = (mpz_sgn(c) >= 0 ? p : n) + i * slot;
    std::copy(src, src + used, dst);
  }
  mpz_limbs_finish(pos.get_mpz_t(), static_cast<mp_size_t>(total));
  mpz_limbs_finish(neg.get_mpz_t(), static_cast<mp_size_t>(total));
  return pos - neg;
}

ZPoly zmul_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t terms = std::min(a.size(), b.size());
  std::size_t bits = zmax_bits(a) + zmax_bits(b) + 2;
  while (terms) {
    ++bits;
    terms >>= 1;
  }
  const std::size_t slot = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  mpz_class prod = zpack(a, slot) * zpack(b, slot);
  const int sign = sgn(prod);
  mpz_abs(prod.get_mpz_t(), prod.get_mpz_t());

  const std::size_t out = a.size() + b.size() - 1;
  const mp_limb_t* limbs = mpz_limbs_read(prod.get_mpz_t());
  const std::size_t have = mpz_size(prod.get_mpz_t());
  mpz_class base;
  mpz_setbit(base.get_mpz_t(), slot * GMP_NUMB_BITS);
  mpz_class half = base / 2;

  ZPoly r(out);
  int carry = 0;
  for (std::size_t i = 0; i < out; ++i) {
    const std::size_t lo = i * slot;
    mpz_class v;
    if (lo < have) {
      mpz_t view;
      mpz_roinit_n(view, limbs + lo, static_cast<mp_size_t>(std::min(slot, have - lo)));
      v = mpz_class(view);
    }
    if (carry) v += 1;
    if (v >= half) {
      v -= base;
      carry = 1;
    } else {
      carry = 0;
    }
    if (sign < 0) v = -v;
    r[i] = std::move(v);
  }
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) < 12) return zmul_schoolbook(a, b);
  return zmul_kronecker(a, b);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a.size() >= b.size() ? a : b;
  const ZPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  if (r.size() < b.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  ztrim(r);
  return r;
}

ZPoly zderivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  ztrim(r);
  return r;
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zprimitive(const ZPoly& a) {
  if (a.empty()) return {};
  mpz_class g = zcontent(a);
  if (sgn(a.back()) < 0) g = -g;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

mpz_class zeval(const ZPoly& a, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc *= x;
    acc += a[i];
  }
  return acc;
}

std::optional<ZPoly> zexact_div(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  const mpz_class& lc = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    mpz_class& top = r[i + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[i].get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t j = 0; j < db; ++j)
    if (sgn(r[j]) != 0) return std::nullopt;
  ztrim(q);
  return q;
}

namespace {

mpz_class max_norm(const ZPoly& a) {
  mpz_class m = 0;
  for (const auto& c : a)
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  return m;
}

// Recovers a polynomial with coefficients in (-x/2, x/2] from its value at x.
ZPoly interpolate_balanced(mpz_class h, const mpz_class& x) {
  ZPoly r;
  const mpz_class half = x / 2;
  while (sgn(h) != 0) {
    mpz_class g;
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    r.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return r;
}

}  // namespace

// Heuristic gcd of primitive inputs (Char, Geddes, Gonnet).
std::optional<ZPoly> zgcd_heuristic(const ZPoly& f, const ZPoly& g) {
  const mpz_class fn = max_norm(f), gn = max_norm(g);
  const mpz_class b = 2 * std::min(fn, gn) + 29;
  mpz_class sb = sqrt(b);
  mpz_class x = std::max<mpz_class>(std::min<mpz_class>(b, 99 * sb),
                                    2 * std::min<mpz_class>(fn / abs(f.back()), gn / abs(g.back())) + 4);
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class ff = zeval(f, x), gg = zeval(g, x);
    if (sgn(ff) != 0 && sgn(gg) != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
      ZPoly cand = zprimitive(interpolate_balanced(h, x));
      if (!cand.empty()) {
        if (auto qf = zexact_div(f, cand))
          if (auto qg = zexact_div(g, cand)) return cand;
      }
      ZPoly cff = interpolate_balanced(ff / h, x);
      if (!cff.empty()) {
        if (auto hh = zexact_div(f, cff)) {
          ZPoly p = zprimitive(*hh);
          if (!p.empty() && zexact_div(g, p)) return p;
        }
      }
    }
    mpz_class s4 = sqrt(sqrt(x));
    x = 73794 * x * s4 / 27011;
  }
  return std::nullopt;
}

ZPoly zgcd_subresultant(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = a0, b = b0;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return zprimitive(a);
  mpz_class g = 1, h = 1;
  while (true) {
    const std::size_t delta = a.size() - b.size();
    // Pseudo-remainder of a by b.
    ZPoly r = a;
    const mpz_class& lb = b.back();
    const std::size_t db = b.size() - 1;
    std::size_t steps = delta + 1;
    while (r.size() >= b.size() && !r.empty()) {
      const std::size_t shift = r.size() - b.size();
      mpz_class lr = r.back();
      for (auto& c : r) c *= lb;
      for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), b[j].get_mpz_t());
      ztrim(r);
      --steps;
    }
    if (steps > 0) {
      mpz_class m;
      mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), steps);
      for (auto& c : r) c *= m;
    }
    if (r.empty()) return zprimitive(b);
    if (r.size() == 1) return ZPoly{1};
    mpz_class hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), delta);
    mpz_class div = g * hd;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      mpz_class gd, hd1;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), delta);
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
  }
}

ZPoly zscaled(const ZPoly& a, const mpz_class& c) {
  if (sgn(c) == 0) return {};
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_mul(r[i].get_mpz_t(), a[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

ZPoly zgcd(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return zprimitive(b);
  if (b.empty()) return zprimitive(a);
  ZPoly pa = zprimitive(a), pb = zprimitive(b);
  if (pa.size() == 1 || pb.size() == 1) return ZPoly{1};
  if (auto h = zgcd_heuristic(pa, pb)) return *h;
  return zgcd_subresultant(pa, pb);
}

}  // namespace ratsol::detail
