#include "ratsol/determinant.hpp"

#include <algorithm>

namespace ratsol {

Integer integer_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    const Integer& piv = m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& lead = m[i][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& x = m[i][j];
        x *= piv;
        mpz_submul(x.get_mpz_t(), lead.get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
  }
  Integer d = m[n - 1][n - 1];
  return sign < 0 ? Integer(-d) : d;
}

QPoly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  if (ys.size() != n) throw std::invalid_argument("interpolation needs matching nodes and values");
  if (n == 0) return {};
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / Rational(xs[i] - xs[i - j]);
      if (i == j) break;
    }
  // Horner on the Newton form.
  std::vector<Rational> acc{c[n - 1]};
  for (std::size_t j = n - 1; j-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t t = 0; t < acc.size(); ++t) {
      next[t + 1] += acc[t];
      next[t] -= acc[t] * xs[j];
    }
    next[0] += c[j];
    acc = std::move(next);
  }
  return QPoly(std::move(acc));
}

QPoly interpolate_with_parity(long degree, const std::function<Integer(long)>& sample) {
  if (degree < 0) return {};
  const bool odd = degree % 2 != 0;
  const long half = degree / 2;
  std::vector<Integer> nodes;
  std::vector<Rational> values;
  for (long i = 0; i <= half; ++i) {
    const long x = odd ? i + 1 : i;
    Integer v = sample(x);
    nodes.push_back(Integer(x) * x);
    values.push_back(odd ? Rational(v, Integer(x)) : Rational(v));
    values.back().canonicalize();
  }
  QPoly reduced = interpolate(nodes, values);
  std::vector<Rational> out(static_cast<std::size_t>(degree) + 1, Rational(0));
  for (std::size_t i = 0; i < reduced.size(); ++i) out[2 * i + (odd ? 1 : 0)] = reduced[i];
  return QPoly(std::move(out));
}

QPoly poly_determinant(const QPolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return QPoly::constant(Rational(1));

  // Row-wise denominator clearing.
  Integer scale = 1;
  std::vector<std::vector<std::vector<Integer>>> rows(n);
  long row_bound = 0;
  std::vector<long> col_deg(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    long rdeg = -1;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& c : m[i][j].coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
      if (!m[i][j].is_zero()) {
        rdeg = std::max(rdeg, m[i][j].degree());
        col_deg[j] = std::max(col_deg[j], m[i][j].degree());
      }
    }
    if (rdeg < 0) return {};
    row_bound += rdeg;
    scale *= l;
    rows[i].resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& c : m[i][j].coefficients()) {
        Integer v;
        mpz_divexact(v.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        rows[i][j].push_back(v * c.get_num());
      }
    }
  }
  long col_bound = 0;
  for (long d : col_deg) {
    if (d < 0) return {};
    col_bound += d;
  }
  const long bound = std::min(row_bound, col_bound);

  std::vector<Integer> xs;
  std::vector<Rational> ys;
  for (long t = 0; t <= bound; ++t) {
    const long x = (t % 2 == 0) ? t / 2 : -(t + 1) / 2;
    IntMatrix a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer acc = 0;
        const auto& cs = rows[i][j];
        for (std::size_t q = cs.size(); q-- > 0;) {
          acc *= x;
          acc += cs[q];
        }
        a[i][j] = std::move(acc);
      }
    xs.emplace_back(x);
    Rational v(integer_determinant(std::move(a)), scale);
    v.canonicalize();
    ys.push_back(std::move(v));
  }
  return interpolate(xs, ys);
}

QPolyMatrix wronskian_matrix(const std::vector<QPoly>& fs) {
  const std::size_t n = fs.size();
  QPolyMatrix m(n, std::vector<QPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    QPoly d = fs[j];
    for (std::size_t i = 0; i < n; ++i) {
      m[i][j] = d;
      d = d.derivative();
    }
  }
  return m;
}

QPoly wronskian(const std::vector<QPoly>& fs) {
  if (fs.empty()) throw std::invalid_argument("Wronskian of an empty family");
  return poly_determinant(wronskian_matrix(fs));
}

}  // namespace ratsol
