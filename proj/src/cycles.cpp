#include "ratsol/cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "ratsol/rational.hpp"

namespace ratsol {

void validate(const ColouredSequence& s) {
  if (s.k < 1) throw InvalidSequence("k must be positive");
  if (s.values.size() != s.colours.size()) throw InvalidSequence("values and colours differ in length");
  if (s.values.empty()) throw InvalidSequence("empty sequence");
  for (long c : s.colours)
    if (c < 0 || c >= s.k) throw InvalidSequence("colour " + std::to_string(c) + " outside 0.." + std::to_string(s.k - 1));
}

std::vector<long> colour_signature(const ColouredSequence& s) {
  std::vector<long> sig(static_cast<std::size_t>(s.k), 0);
  for (long c : s.colours) ++sig[c];
  return sig;
}

bool is_oddly_coloured(const ColouredSequence& s) {
  for (long n : colour_signature(s))
    if (n % 2 == 0) return false;
  return true;
}

void require_odd_sequence(const ColouredSequence& s) {
  validate(s);
  if (s.size() % 2 == 0) throw InvalidSequence("sequence length must be odd");
  if (!is_oddly_coloured(s)) throw InvalidSequence("sequence is not oddly coloured");
}

std::vector<long> flip_sequence(const ColouredSequence& s) {
  std::vector<long> mu(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) mu[i] = s.k * s.values[i] + s.colours[i];
  return mu;
}

ColouredSequence from_flip_sequence(const std::vector<long>& mu, long k) {
  if (k < 1) throw InvalidSequence("k must be positive");
  ColouredSequence s{{}, {}, k};
  for (long m : mu) {
    s.values.push_back(floor_div(m, k));
    s.colours.push_back(euclid_mod(m, k));
  }
  return s;
}

MayaDiagram xi_k(const ColouredSequence& s) {
  validate(s);
  std::vector<std::vector<long>> classes(static_cast<std::size_t>(s.k));
  for (std::size_t i = 0; i < s.size(); ++i) classes[s.colours[i]].push_back(s.values[i]);
  std::vector<MayaDiagram> parts;
  for (auto& c : classes) {
    if (c.size() % 2 == 0) throw InvalidSequence("sequence is not oddly coloured");
    parts.push_back(xi(c));
  }
  return interlace(parts);
}

MayaCycle cycle_from_flips(const MayaDiagram& m0, const std::vector<long>& mu, long k) {
  MayaCycle c;
  c.k = k;
  c.mu = mu;
  c.diagrams.push_back(m0);
  for (long m : mu) {
    const MayaDiagram& cur = c.diagrams.back();
    c.sigma.push_back(cur.contains(m) ? 1 : -1);
    c.diagrams.push_back(flip(cur, m));
  }
  if (c.diagrams.back() != ratsol::translate(m0, k))
    throw InvalidCycle("flips do not close up to a translation by k");
  return c;
}

void validate(const MayaCycle& c) {
  if (c.mu.empty()) throw InvalidCycle("empty cycle");
  if (c.diagrams.size() != c.mu.size() + 1 || c.sigma.size() != c.mu.size())
    throw InvalidCycle("cycle component lengths disagree");
  for (std::size_t i = 0; i < c.mu.size(); ++i) {
    if (c.diagrams[i + 1] != flip(c.diagrams[i], c.mu[i]))
      throw InvalidCycle("diagram " + std::to_string(i + 1) + " is not a flip of its predecessor");
    if (c.sigma[i] != (c.diagrams[i].contains(c.mu[i]) ? 1 : -1))
      throw InvalidCycle("sign " + std::to_string(i) + " inconsistent with the flip");
  }
  if (c.diagrams.back() != ratsol::translate(c.diagrams.front(), c.k)) throw InvalidCycle("cycle does not close up");
}

MayaCycle build_cycle(const ColouredSequence& s) {
  require_odd_sequence(s);
  return cycle_from_flips(xi_k(s), flip_sequence(s), s.k);
}

ColouredSequence cycle_to_sequence(const MayaCycle& c) {
  validate(c);
  return from_flip_sequence(c.mu, c.k);
}

MayaCycle translate(const MayaCycle& c, long j) {
  MayaCycle out = c;
  for (auto& d : out.diagrams) d = ratsol::translate(d, j);
  for (auto& m : out.mu) m += j;
  return out;
}

ColouredSequence pi_shift(const ColouredSequence& s) {
  validate(s);
  ColouredSequence r = s;
  std::rotate(r.values.begin(), r.values.begin() + 1, r.values.end());
  std::rotate(r.colours.begin(), r.colours.begin() + 1, r.colours.end());
  r.values.back() += 1;
  return r;
}

ColouredSequence pi_inverse(const ColouredSequence& s) {
  validate(s);
  ColouredSequence r = s;
  std::rotate(r.values.rbegin(), r.values.rbegin() + 1, r.values.rend());
  std::rotate(r.colours.rbegin(), r.colours.rbegin() + 1, r.colours.rend());
  r.values.front() -= 1;
  return r;
}

ColouredSequence translate_T(const ColouredSequence& s, long j) {
  validate(s);
  std::vector<long> mu = flip_sequence(s);
  for (auto& m : mu) m += j;
  return from_flip_sequence(mu, s.k);
}

bool is_standard(const ColouredSequence& s) { return xi_k(s).is_standard(); }

StandardizedSequence to_standard(const ColouredSequence& s) {
  require_odd_sequence(s);
  // T translates every diagram of the cycle by +1, so the step count is -beta_0.
  const long steps = -block_coordinates(xi_k(s)).front();
  return {translate_T(s, steps), steps};
}

Degeneracy is_degenerate(const ColouredSequence& s) {
  validate(s);
  const auto mu = flip_sequence(s);
  const std::size_t p = mu.size();
  for (std::size_t i = 0; i + 1 < p; ++i)
    if (mu[i] == mu[i + 1]) return {Degeneracy::Kind::consecutive_repeat, i, i + 1};
  if (p > 1 && mu[p - 1] == mu[0] + s.k) return {Degeneracy::Kind::wrap, p - 1, 0};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 2; j < p; ++j)
      if (mu[i] == mu[j]) return {Degeneracy::Kind::non_consecutive_repeat, i, j};
  return {};
}

std::string describe(const Degeneracy& d) {
  switch (d.kind) {
    case Degeneracy::Kind::none:
      return "not degenerate";
    case Degeneracy::Kind::consecutive_repeat:
      return "consecutive repeat mu_" + std::to_string(d.i) + " = mu_" + std::to_string(d.j);
    case Degeneracy::Kind::non_consecutive_repeat:
      return "non-consecutive repeat mu_" + std::to_string(d.i) + " = mu_" + std::to_string(d.j);
    case Degeneracy::Kind::wrap:
      return "wrap-around mu_" + std::to_string(d.i) + " = mu_0 + k";
  }
  return {};
}

ColouredSequence reduce_degenerate(const ColouredSequence& s, std::size_t i, std::size_t j) {
  validate(s);
  if (!(i < j && j < s.size())) throw InvalidSequence("reduction needs indices i < j within the sequence");
  if (s.values[i] != s.values[j] || s.colours[i] != s.colours[j])
    throw InvalidSequence("entries " + std::to_string(i) + " and " + std::to_string(j) + " differ");
  ColouredSequence r{{}, {}, s.k};
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t == i || t == j) continue;
    r.values.push_back(s.values[t]);
    r.colours.push_back(s.colours[t]);
  }
  return r;
}

std::vector<std::vector<long>> odd_compositions(long p, long k) {
  std::vector<std::vector<long>> out;
  if (k < 1 || p < k) return out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long remaining, long parts) {
    if (parts == 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (long x = 1; x <= remaining - (parts - 1); x += 2) {
      cur.push_back(x);
      rec(remaining - x, parts - 1);
      cur.pop_back();
    }
  };
  rec(p, k);
  return out;
}

std::vector<SignatureGroup> enumerate_signatures(long p) {
  if (p < 1 || p % 2 == 0) throw InvalidSequence("p must be odd and positive");
  std::vector<SignatureGroup> out;
  for (long k = 1; k <= p; k += 2) out.push_back({k, odd_compositions(p, k)});
  return out;
}

long fibonacci(long n) {
  long a = 0, b = 1;
  for (long i = 0; i < n; ++i) {
    long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

long signature_count(long p, long k) {
  const long n = (p - 1) / 2;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + (k - 1) / 2, k - 1);
  return c.get_si();
}

void enumerate_sequences(long p, long k, long bound, const std::function<void(const ColouredSequence&)>& emit) {
  if (p < 1 || p % 2 == 0 || k < 1 || k % 2 == 0 || k > p || bound < 0)
    throw InvalidSequence("enumeration needs odd p, odd k <= p and bound >= 0");
  for (const auto& sig : odd_compositions(p, k)) {
    // Colour words with this signature, lexicographic.
    std::vector<long> word;
    for (long c = 0; c < k; ++c) word.insert(word.end(), sig[c], c);
    do {
      std::vector<long> values(p, 0);
      while (true) {
        // Standard iff 0 occurs an odd number of times in colour 0; all other
        // classes are automatically nonnegative.
        long zeros = 0;
        for (long i = 0; i < p; ++i)
          if (word[i] == 0 && values[i] == 0) ++zeros;
        if (zeros % 2 == 1) emit(ColouredSequence{values, word, k});
        long i = p - 1;
        while (i >= 0 && values[i] == bound) values[i--] = 0;
        if (i < 0) break;
        ++values[i];
      }
    } while (std::next_permutation(word.begin(), word.end()));
  }
}

std::vector<ColouredSequence> list_sequences(long p, long k, long bound) {
  std::vector<ColouredSequence> out;
  enumerate_sequences(p, k, bound, [&](const ColouredSequence& s) { out.push_back(s); });
  return out;
}

std::string to_text(const ColouredSequence& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ", ";
    out << s.values[i] << "[" << s.colours[i] << "]";
  }
  return out.str();
}

ColouredSequence parse_sequence_text(const std::string& text, long k) {
  ColouredSequence s{{}, {}, k};
  std::string cleaned;
  for (char ch : text) cleaned += (ch == ',' || ch == '(' || ch == ')') ? ' ' : ch;
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    long colour = 0;
    auto lb = tok.find('[');
    std::string value_text = tok.substr(0, lb);
    if (lb != std::string::npos) {
      auto rb = tok.find(']', lb);
      if (rb == std::string::npos || rb + 1 != tok.size()) throw InvalidSequence("malformed entry: " + tok);
      try {
        colour = std::stol(tok.substr(lb + 1, rb - lb - 1));
      } catch (const std::exception&) {
        throw InvalidSequence("malformed colour: " + tok);
      }
    }
    try {
      std::size_t used = 0;
      long v = std::stol(value_text, &used);
      if (used != value_text.size()) throw InvalidSequence("malformed value: " + tok);
      s.values.push_back(v);
    } catch (const InvalidSequence&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidSequence("malformed value: " + tok);
    }
    s.colours.push_back(colour);
  }
  validate(s);
  return s;
}

}  // namespace ratsol
