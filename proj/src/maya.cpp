#include "ratsol/maya.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ratsol/rational.hpp"

namespace ratsol {

namespace {

void sort_unique(std::vector<long>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<long> symmetric_difference_shift(const MayaDiagram& m, long k) {
  const long lo = std::min(m.window_low(), m.window_low() + k) - 1;
  const long hi = std::max(m.window_high(), m.window_high() + k) + 1;
  std::vector<long> out;
  for (long x = lo; x < hi; ++x)
    if (m.contains(x - k) != m.contains(x)) out.push_back(x);
  return out;
}

}  // namespace

MayaDiagram::MayaDiagram(std::vector<long> negative_holes, std::vector<long> nonnegative_members)
    : holes_(std::move(negative_holes)), members_(std::move(nonnegative_members)) {
  sort_unique(holes_);
  sort_unique(members_);
  if (!holes_.empty() && holes_.back() >= 0) throw std::invalid_argument("Maya diagram holes must be negative");
  if (!members_.empty() && members_.front() < 0)
    throw std::invalid_argument("Maya diagram members must be nonnegative");
}

MayaDiagram MayaDiagram::from_window(long low, long high, const std::function<bool(long)>& member) {
  std::vector<long> holes, members;
  for (long x = std::min(low, 0L); x < std::max(high, 0L); ++x) {
    const bool in = x < low ? true : (x < high ? member(x) : false);
    if (x < 0 && !in) holes.push_back(x);
    if (x >= 0 && in) members.push_back(x);
  }
  return MayaDiagram(std::move(holes), std::move(members));
}

MayaDiagram MayaDiagram::standard(std::vector<long> positives) {
  for (long p : positives)
    if (p <= 0) throw std::invalid_argument("standard diagram members must be positive");
  return MayaDiagram({}, std::move(positives));
}

bool MayaDiagram::contains(long m) const {
  if (m < 0) return !std::binary_search(holes_.begin(), holes_.end(), m);
  return std::binary_search(members_.begin(), members_.end(), m);
}

FrobeniusSymbol frobenius(const MayaDiagram& m) {
  FrobeniusSymbol f;
  for (auto it = m.negative_holes().begin(); it != m.negative_holes().end(); ++it) f.s.push_back(-*it - 1);
  // holes ascending -> s descending already
  f.t.assign(m.nonnegative_members().rbegin(), m.nonnegative_members().rend());
  return f;
}

MayaDiagram from_frobenius(const FrobeniusSymbol& f) {
  auto check = [](const std::vector<long>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw std::invalid_argument("Frobenius entries must be nonnegative");
      if (i > 0 && v[i] >= v[i - 1]) throw std::invalid_argument("Frobenius sequences must strictly decrease");
    }
  };
  check(f.s);
  check(f.t);
  std::vector<long> holes;
  for (long s : f.s) holes.push_back(-s - 1);
  return MayaDiagram(std::move(holes), f.t);
}

MayaDiagram translate(const MayaDiagram& m, long k) {
  return MayaDiagram::from_window(m.window_low() + k, m.window_high() + k,
                                  [&](long x) { return m.contains(x - k); });
}

MayaDiagram flip(const MayaDiagram& m, long pos) {
  const long lo = std::min(m.window_low(), pos);
  const long hi = std::max(m.window_high(), pos + 1);
  return MayaDiagram::from_window(lo, hi, [&](long x) { return x == pos ? !m.contains(x) : m.contains(x); });
}

MayaDiagram multi_flip(const MayaDiagram& m, const std::vector<long>& positions) {
  std::map<long, int> count;
  for (long p : positions) ++count[p];
  long lo = m.window_low(), hi = m.window_high();
  for (const auto& [p, c] : count) {
    lo = std::min(lo, p);
    hi = std::max(hi, p + 1);
  }
  return MayaDiagram::from_window(lo, hi, [&](long x) {
    auto it = count.find(x);
    const bool toggled = it != count.end() && it->second % 2 == 1;
    return m.contains(x) != toggled;
  });
}

std::vector<long> block_coordinates(const MayaDiagram& m) { return symmetric_difference_shift(m, 1); }

MayaDiagram xi(std::vector<long> beta) {
  if (beta.size() % 2 == 0) throw std::invalid_argument("block coordinates need odd cardinality");
  std::sort(beta.begin(), beta.end());
  std::vector<long> b;
  for (std::size_t i = 0; i < beta.size();) {
    std::size_t j = i;
    while (j < beta.size() && beta[j] == beta[i]) ++j;
    if ((j - i) % 2 == 1) b.push_back(beta[i]);
    i = j;
  }
  const long low = b.front();
  const long high = b.back();
  return MayaDiagram::from_window(low, high, [&](long x) {
    // number of b_i <= x among b_1.. decides membership in [b1,b2) u [b3,b4) ...
    const auto cnt = std::upper_bound(b.begin(), b.end(), x) - b.begin();
    return cnt % 2 == 0;
  });
}

long genus(const MayaDiagram& m) { return (static_cast<long>(block_coordinates(m).size()) - 1) / 2; }

MayaDiagram interlace(const std::vector<MayaDiagram>& parts) {
  const long k = static_cast<long>(parts.size());
  if (k < 1) throw std::invalid_argument("interlacing needs k >= 1");
  long lo = 0, hi = 0;
  for (long i = 0; i < k; ++i) {
    lo = std::min(lo, k * parts[i].window_low() + i);
    hi = std::max(hi, k * parts[i].window_high() + i);
  }
  return MayaDiagram::from_window(lo, hi, [&](long x) {
    const long i = euclid_mod(x, k);
    return parts[i].contains(floor_div(x, k));
  });
}

std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, long k) {
  if (k < 1) throw std::invalid_argument("modular decomposition needs k >= 1");
  std::vector<MayaDiagram> out;
  for (long i = 0; i < k; ++i) {
    const long lo = floor_div(m.window_low() - i, k) - 1;
    const long hi = floor_div(m.window_high() - i, k) + 2;
    out.push_back(MayaDiagram::from_window(lo, hi, [&](long q) { return m.contains(k * q + i); }));
  }
  return out;
}

std::vector<long> flip_set_k(const MayaDiagram& m, long k) {
  if (k < 1) throw std::invalid_argument("flip set needs k >= 1");
  return symmetric_difference_shift(m, k);
}

std::vector<long> cyclic_signature(const MayaDiagram& m, long k) {
  std::vector<long> sig;
  for (const auto& part : modular_decompose(m, k)) sig.push_back(2 * genus(part) + 1);
  return sig;
}

long cyclicity(const MayaDiagram& m, long k) {
  long p = 0;
  for (long x : cyclic_signature(m, k)) p += x;
  return p;
}

StandardizedDiagram to_standard(const MayaDiagram& m) {
  const long shift = -block_coordinates(m).front();
  return {translate(m, shift), shift};
}

std::string render(const MayaDiagram& m, long low, long high) {
  std::string out;
  for (long x = low; x < high; ++x) {
    if (x == 0) out += "|";
    out += m.contains(x) ? "⬛" : "⬜";
  }
  if (high <= 0) out += "|";
  return out;
}

std::string render(const MayaDiagram& m) {
  return render(m, std::min(m.window_low(), 0L) - 1, std::max(m.window_high(), 0L) + 1);
}

std::string wronskian_label(const MayaDiagram& m) {
  auto join = [](const std::vector<long>& v, const char* prefix) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::string(prefix) + std::to_string(v[i]);
    return out;
  };
  const FrobeniusSymbol f = frobenius(m);
  if (f.s.empty()) {
    std::vector<long> t(f.t.rbegin(), f.t.rend());
    return t.empty() ? "1" : "Wr(" + join(t, "H") + ")";
  }
  return "pWr(s=[" + join(f.s, "") + "];t=[" + join(f.t, "") + "])";
}

}  // namespace ratsol
