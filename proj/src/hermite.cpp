#include "ratsol/hermite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "ratsol/determinant.hpp"

namespace ratsol {

namespace {

std::mutex hermite_mutex;
std::deque<QPoly> hermite_memo;

QPoly hermite_like(long n, int sign) {
  // P_{n+1} = 2z P_n + sign * 2n P_{n-1}
  QPoly prev = QPoly::constant(Rational(1));
  if (n == 0) return prev;
  QPoly cur = QPoly::monomial(Rational(2), 1);
  for (long j = 1; j < n; ++j) {
    QPoly next = cur.shifted(1).scaled(Rational(2)) + prev.scaled(Rational(2 * j * sign));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Values P_0(x), ..., P_n(x) of the three-term family.
std::vector<Integer> family_values(long n, long x, int sign) {
  std::vector<Integer> v(static_cast<std::size_t>(std::max(n, 1L)) + 1);
  v[0] = 1;
  v[1] = 2 * x;
  for (long j = 1; j < n; ++j) v[j + 1] = 2 * x * v[j] + sign * 2 * j * v[j - 1];
  return v;
}

// 2^j t!/(t-j)!
Integer derivative_factor(long t, long j) {
  Integer f = 1;
  for (long i = 0; i < j; ++i) f *= 2 * (t - i);
  return f;
}

Integer sample_pseudo_wronskian(const FrobeniusSymbol& f, long x) {
  const long r = static_cast<long>(f.s.size()), q = static_cast<long>(f.t.size());
  const long n = r + q;
  long top = 0;
  for (long s : f.s) top = std::max(top, s + n);
  for (long t : f.t) top = std::max(top, t);
  const auto theta = family_values(top, x, +1);
  const auto herm = family_values(top, x, -1);
  IntMatrix a(n, std::vector<Integer>(n));
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < n; ++j) a[i][j] = theta[f.s[i] + j];
  for (long i = 0; i < q; ++i) {
    const long t = f.t[q - 1 - i];  // ascending t
    for (long j = 0; j < n; ++j) a[r + i][j] = j > t ? Integer(0) : derivative_factor(t, j) * herm[t - j];
  }
  return integer_determinant(std::move(a));
}

long standard_degree(const std::vector<long>& t) {
  long d = 0;
  const long q = static_cast<long>(t.size());
  for (long x : t) d += x;
  return d - q * (q - 1) / 2;
}

struct Cache {
  std::mutex mutex;
  std::map<std::vector<long>, std::shared_ptr<const WronskianData>> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

QPoly hermite(long n) {
  if (n < 0) throw std::invalid_argument("Hermite index must be nonnegative");
  std::lock_guard lock(hermite_mutex);
  if (hermite_memo.empty()) {
    hermite_memo.push_back(QPoly::constant(Rational(1)));
    hermite_memo.push_back(QPoly::monomial(Rational(2), 1));
  }
  while (static_cast<long>(hermite_memo.size()) <= n) {
    const long j = static_cast<long>(hermite_memo.size()) - 1;
    const QPoly& cur = hermite_memo[j];
    const QPoly& prev = hermite_memo[j - 1];
    hermite_memo.push_back(cur.shifted(1).scaled(Rational(2)) - prev.scaled(Rational(2 * j)));
  }
  return hermite_memo[n];
}

QPoly conj_hermite(long n) {
  if (n < 0) throw std::invalid_argument("Hermite index must be nonnegative");
  return hermite_like(n, +1);
}

Rational rescale_constant(const MayaDiagram& m) {
  const FrobeniusSymbol f = frobenius(m);
  const long r = static_cast<long>(f.s.size()), q = static_cast<long>(f.t.size());
  Integer den = 1;
  for (long i = 0; i < r; ++i)
    for (long j = i + 1; j < r; ++j) den *= 2 * (f.s[j] - f.s[i]);
  for (long i = 0; i < q; ++i)
    for (long j = i + 1; j < q; ++j) den *= 2 * (f.t[i] - f.t[j]);
  Rational c(((r * q) % 2 == 0) ? 1 : -1);
  c /= Rational(den);
  return c;
}

long pseudo_wronskian_degree(const MayaDiagram& m) {
  return standard_degree(to_standard(m).diagram.nonnegative_members());
}

QPoly pseudo_wronskian_direct(const MayaDiagram& m) {
  const FrobeniusSymbol f = frobenius(m);
  if (f.s.empty() && f.t.empty()) return QPoly::constant(Rational(1));
  return interpolate_with_parity(pseudo_wronskian_degree(m), [&](long x) { return sample_pseudo_wronskian(f, x); });
}

std::shared_ptr<const WronskianData> standard_wronskian(const MayaDiagram& m) {
  const MayaDiagram s = m.is_standard() ? m : to_standard(m).diagram;
  const std::vector<long>& key = s.nonnegative_members();
  {
    std::lock_guard lock(cache().mutex);
    auto it = cache().entries.find(key);
    if (it != cache().entries.end()) return it->second;
  }
  auto data = std::make_shared<WronskianData>();
  data->poly = pseudo_wronskian_direct(s);
  data->log_derivative = log_derivative(data->poly);
  std::lock_guard lock(cache().mutex);
  auto [it, inserted] = cache().entries.emplace(key, std::move(data));
  return it->second;
}

const QRatFn& wronskian_log_derivative(const MayaDiagram& m) { return standard_wronskian(m)->log_derivative; }

void clear_wronskian_cache() {
  std::lock_guard lock(cache().mutex);
  cache().entries.clear();
}

std::size_t wronskian_cache_size() {
  std::lock_guard lock(cache().mutex);
  return cache().entries.size();
}

PseudoWronskian pseudo_wronskian(const MayaDiagram& m) {
  const auto std_form = to_standard(m).diagram;
  const auto data = standard_wronskian(std_form);
  const Rational cm = rescale_constant(m);
  // c_M H_M = c_std H_std
  const Rational ratio = rescale_constant(std_form) / cm;
  return {m, data->poly.scaled(ratio), cm};
}

QPoly rescaled(const MayaDiagram& m) {
  const auto pw = pseudo_wronskian(m);
  return pw.poly.scaled(pw.rescale_constant);
}

QPoly hermite_wronskian(const std::vector<long>& indices) {
  if (indices.empty()) return QPoly::constant(Rational(1));
  for (long t : indices)
    if (t < 0) throw std::invalid_argument("Hermite index must be nonnegative");
  std::vector<long> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  // Sign of the permutation taking `indices` to ascending order.
  long inversions = 0;
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j)
      if (indices[i] > indices[j]) ++inversions;
  FrobeniusSymbol f{{}, std::vector<long>(sorted.rbegin(), sorted.rend())};
  QPoly p = interpolate_with_parity(standard_degree(sorted), [&](long x) { return sample_pseudo_wronskian(f, x); });
  return inversions % 2 ? -p : p;
}

QPoly generalized_hermite(long m, long n) {
  if (m < 1 || n < 1) throw std::invalid_argument("generalized Hermite needs m, n >= 1");
  std::vector<long> idx;
  for (long i = 0; i < n; ++i) idx.push_back(m + i);
  return hermite_wronskian(idx);
}

QPoly generalized_okamoto(long m, long n) {
  if (m < 0 || n < 0 || m + n == 0) throw std::invalid_argument("generalized Okamoto needs m + n >= 1");
  std::vector<long> idx;
  for (long i = 0; i < m; ++i) idx.push_back(1 + 3 * i);
  for (long i = 0; i < n; ++i) idx.push_back(2 + 3 * i);
  return hermite_wronskian(idx);
}

}  // namespace ratsol
