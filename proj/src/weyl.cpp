#include "ratsol/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace ratsol {

namespace {

Letter s_letter(long i) { return {Letter::Kind::s, i, 1}; }
Letter pi_letter() { return {Letter::Kind::pi, 0, 1}; }
Letter pi_inv_letter() { return {Letter::Kind::pi_inv, 0, 1}; }

long wrap_index(long i, std::size_t p) {
  const long m = static_cast<long>(p);
  return ((i % m) + m) % m;
}

// Written (right-to-left) word for E_i, or its inverse.
std::vector<Letter> e_word(long i, std::size_t p, bool inverse) {
  std::vector<Letter> w;
  for (std::size_t t = 0; t + 1 < p; ++t) w.push_back(s_letter(wrap_index(i + static_cast<long>(t), p)));
  w.push_back(pi_letter());
  if (inverse) {
    std::reverse(w.begin(), w.end());
    w.front() = pi_inv_letter();
  }
  return w;
}

void require_reflections(std::size_t p) {
  if (p < 2) throw std::invalid_argument("reflections s_i need at least three entries");
}

}  // namespace

std::string to_string(const Letter& l) {
  std::string out;
  switch (l.kind) {
    case Letter::Kind::s:
      out = "s" + std::to_string(l.index);
      break;
    case Letter::Kind::pi:
      out = "pi";
      break;
    case Letter::Kind::pi_inv:
      out = "pinv";
      break;
    case Letter::Kind::E:
      out = "E" + std::to_string(l.index);
      break;
  }
  if (l.power != 1) out += "^" + std::to_string(l.power);
  return out;
}

std::string to_string(const GroupWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

GroupWord parse_word(const std::string& text) {
  static const std::regex token(R"((s|E)(\d+)|(pinv|pi)(?:\^(-?\d+))?)");
  static const std::regex power_suffix(R"(^(.*[0-9a-z])\^(-?\d+)$)");
  GroupWord w;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::string base = tok;
    long power = 1;
    std::smatch m;
    if (std::regex_match(tok, m, power_suffix)) {
      base = m[1];
      power = std::stol(m[2]);
    }
    if (!std::regex_match(base, m, token)) throw InvalidWord("unknown letter '" + tok + "'");
    Letter l;
    if (m[1].matched) {
      l.kind = m[1] == "s" ? Letter::Kind::s : Letter::Kind::E;
      l.index = std::stol(m[2]);
    } else {
      l.kind = m[3] == "pi" ? Letter::Kind::pi : Letter::Kind::pi_inv;
    }
    l.power = power;
    if (power == 0) continue;
    w.letters.push_back(l);
  }
  return w;
}

GroupWord inverse(const GroupWord& w) {
  GroupWord r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Letter l = *it;
    l.power = -l.power;
    r.letters.push_back(l);
  }
  return r;
}

void check_indices(const GroupWord& w, std::size_t p) {
  for (const auto& l : w.letters) {
    if ((l.kind == Letter::Kind::s || l.kind == Letter::Kind::E) && (l.index < 0 || l.index >= static_cast<long>(p)))
      throw InvalidWord("letter " + to_string(l) + " is out of range for period " + std::to_string(p));
    if (l.kind == Letter::Kind::s) require_reflections(p);
  }
}

GroupWord expand(const GroupWord& w, std::size_t p) {
  check_indices(w, p);
  GroupWord out;
  for (const auto& l : w.letters) {
    const long reps = std::labs(l.power);
    const bool inv = l.power < 0;
    switch (l.kind) {
      case Letter::Kind::s:
        if (reps % 2) out.letters.push_back(s_letter(l.index));
        break;
      case Letter::Kind::pi:
      case Letter::Kind::pi_inv: {
        const bool forward = (l.kind == Letter::Kind::pi) != inv;
        for (long r = 0; r < reps; ++r) out.letters.push_back(forward ? pi_letter() : pi_inv_letter());
        break;
      }
      case Letter::Kind::E:
        for (long r = 0; r < reps; ++r) {
          auto e = e_word(l.index, p, inv);
          out.letters.insert(out.letters.end(), e.begin(), e.end());
        }
        break;
    }
  }
  return out;
}

ColouredSequence act_s(std::size_t i, const ColouredSequence& seq) {
  validate(seq);
  const std::size_t p = seq.size();
  require_reflections(p);
  if (i >= p) throw std::out_of_range("s_" + std::to_string(i) + " is out of range");
  ColouredSequence r = seq;
  if (i + 1 < p) {
    std::swap(r.values[i], r.values[i + 1]);
    std::swap(r.colours[i], r.colours[i + 1]);
  } else {
    r.values[0] = seq.values[p - 1] - 1;
    r.values[p - 1] = seq.values[0] + 1;
    std::swap(r.colours[0], r.colours[p - 1]);
  }
  return r;
}

ColouredSequence act_pi(const ColouredSequence& seq) { return pi_shift(seq); }
ColouredSequence act_pi_inverse(const ColouredSequence& seq) { return pi_inverse(seq); }

namespace {

ColouredSequence apply_expanded(const GroupWord& w, ColouredSequence seq) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    switch (it->kind) {
      case Letter::Kind::s:
        seq = act_s(static_cast<std::size_t>(it->index), seq);
        break;
      case Letter::Kind::pi:
        seq = act_pi(seq);
        break;
      case Letter::Kind::pi_inv:
        seq = act_pi_inverse(seq);
        break;
      case Letter::Kind::E:
        throw std::logic_error("unexpanded E letter");
    }
  }
  return seq;
}

ColouredSequence act_E_power(std::size_t i, long power, const ColouredSequence& seq) {
  validate(seq);
  const std::size_t p = seq.size();
  if (i >= p) throw std::out_of_range("E_" + std::to_string(i) + " is out of range");
  const ColouredSequence via_word = apply_expanded(expand(GroupWord{{{Letter::Kind::E, static_cast<long>(i), power}}}, p), seq);
  ColouredSequence direct = seq;
  direct.values[i] += power;
  if (!(via_word == direct))
    throw std::logic_error("E_" + std::to_string(i) + " word gives " + to_text(via_word) + ", expected " + to_text(direct));
  return via_word;
}

}  // namespace

ColouredSequence act_E(std::size_t i, const ColouredSequence& seq) { return act_E_power(i, 1, seq); }

ColouredSequence act(const Letter& g, const ColouredSequence& seq) {
  if (g.kind == Letter::Kind::E) {
    if (g.index < 0) throw std::out_of_range("negative E index");
    return act_E_power(static_cast<std::size_t>(g.index), g.power, seq);
  }
  return apply_expanded(expand(GroupWord{{g}}, seq.size()), seq);
}

ColouredSequence act(const GroupWord& w, const ColouredSequence& seq) {
  check_indices(w, seq.size());
  ColouredSequence r = seq;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = act(*it, r);
  return r;
}

MayaCycle act_on_cycle(const Letter& g, const MayaCycle& c) {
  validate(c);
  const std::size_t p = c.period();
  if (g.kind == Letter::Kind::E || g.power != 1) return act_on_cycle(expand(GroupWord{{g}}, p), c);
  const auto& mu = c.mu;
  std::vector<long> next;
  switch (g.kind) {
    case Letter::Kind::s: {
      require_reflections(p);
      if (g.index < 0 || g.index >= static_cast<long>(p)) throw std::out_of_range("reflection index out of range");
      const auto i = static_cast<std::size_t>(g.index);
      next = mu;
      if (i + 1 < p) {
        std::swap(next[i], next[i + 1]);
        return cycle_from_flips(c.diagrams[0], next, c.k);
      }
      next.front() = mu[p - 1] - c.k;
      next.back() = mu[0] + c.k;
      return cycle_from_flips(flip(c.diagrams[1], mu[p - 1] - c.k), next, c.k);
    }
    case Letter::Kind::pi:
      next.assign(mu.begin() + 1, mu.end());
      next.push_back(mu[0] + c.k);
      return cycle_from_flips(c.diagrams[1], next, c.k);
    case Letter::Kind::pi_inv:
      next.push_back(mu[p - 1] - c.k);
      next.insert(next.end(), mu.begin(), mu.end() - 1);
      return cycle_from_flips(translate(c.diagrams[p - 1], -c.k), next, c.k);
    case Letter::Kind::E:
      break;
  }
  throw std::logic_error("unreachable");
}

MayaCycle act_on_cycle(const GroupWord& w, const MayaCycle& c) {
  const GroupWord e = expand(w, c.period());
  MayaCycle r = c;
  for (auto it = e.letters.rbegin(); it != e.letters.rend(); ++it) r = act_on_cycle(*it, r);
  return r;
}

DressingChainSolution backlund(const Letter& g, const DressingChainSolution& s) {
  const std::size_t p = s.w.size();
  if (g.kind == Letter::Kind::E || g.power != 1) return backlund(expand(GroupWord{{g}}, p), s);
  DressingChainSolution r = s;
  if (s.cycle) r.cycle = act_on_cycle(g, *s.cycle);
  switch (g.kind) {
    case Letter::Kind::s: {
      require_reflections(p);
      if (g.index < 0 || g.index >= static_cast<long>(p)) throw std::out_of_range("reflection index out of range");
      const auto i = static_cast<std::size_t>(g.index);
      const std::size_t j = (i + 1) % p, h = (i + p - 1) % p;
      const Rational& a = s.a[i];
      if (sgn(a) == 0) return r;
      const QRatFn sum = s.w[i] + s.w[j];
      if (sum.is_zero())
        throw SingularBacklund("w_" + std::to_string(i) + " + w_" + std::to_string(j) + " vanishes with a_" +
                                   std::to_string(i) + " != 0",
                               i);
      const QRatFn q = QRatFn(QPoly::constant(a)) / sum;
      r.w[i] = s.w[i] + q;
      r.w[j] = s.w[j] - q;
      r.a[i] = -a;
      r.a[h] += a;
      r.a[j] += a;
      return r;
    }
    case Letter::Kind::pi:
      std::rotate(r.w.begin(), r.w.begin() + 1, r.w.end());
      std::rotate(r.a.begin(), r.a.begin() + 1, r.a.end());
      return r;
    case Letter::Kind::pi_inv:
      std::rotate(r.w.rbegin(), r.w.rbegin() + 1, r.w.rend());
      std::rotate(r.a.rbegin(), r.a.rbegin() + 1, r.a.rend());
      return r;
    case Letter::Kind::E:
      break;
  }
  throw std::logic_error("unreachable");
}

DressingChainSolution backlund(const GroupWord& w, const DressingChainSolution& s) {
  const GroupWord e = expand(w, s.w.size());
  DressingChainSolution r = s;
  for (auto it = e.letters.rbegin(); it != e.letters.rend(); ++it) r = backlund(*it, r);
  return r;
}

void validate(const SeedSignature& sig) {
  if (sig.parts.empty()) throw std::invalid_argument("empty signature");
  for (long q : sig.parts)
    if (q <= 0 || q % 2 == 0) throw std::invalid_argument("signature parts must be odd and positive");
}

SeedSignature signature_of(const ColouredSequence& seq) {
  require_odd_sequence(seq);
  return {colour_signature(seq)};
}

ColouredSequence seed_sequence(const SeedSignature& sig) {
  validate(sig);
  ColouredSequence s{{}, {}, static_cast<long>(sig.parts.size())};
  for (std::size_t c = 0; c < sig.parts.size(); ++c)
    for (long t = 0; t < sig.parts[c]; ++t) {
      s.values.push_back(0);
      s.colours.push_back(static_cast<long>(c));
    }
  return s;
}

PainleveSolution seed_solution(const SeedSignature& sig) {
  validate(sig);
  const long k = static_cast<long>(sig.parts.size());
  const long p = std::accumulate(sig.parts.begin(), sig.parts.end(), 0L);
  std::vector<bool> in_q(static_cast<std::size_t>(p) + 1, false);
  long q = 0;
  for (long part : sig.parts) {
    q += part;
    in_q[static_cast<std::size_t>(q)] = true;
  }
  const Rational d = scaled_radicand(k);
  const Rational inv_k(1, k);
  PainleveSolution out;
  out.k = k;
  for (long i = 0; i < p; ++i) {
    const bool on = in_q[static_cast<std::size_t>(i + 1)];
    out.f.push_back(on ? ERatFn(lift(QPoly::monomial(inv_k, 1), d)) : ERatFn());
    out.alpha.push_back(on ? inv_k : Rational(0));
  }
  return out;
}

OrbitPath orbit_path(const ColouredSequence& seq) {
  require_odd_sequence(seq);
  for (long v : seq.values)
    if (v < 0) throw InvalidSequence("orbit paths need non-negative values");
  OrbitPath out{signature_of(seq), {}};
  const std::size_t p = seq.size();

  // Colour-sorted arrangement of the target, reached from the seed by increments.
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return seq.colours[a] < seq.colours[b]; });
  std::vector<std::pair<long, long>> cur;
  for (auto t : order) cur.emplace_back(seq.values[t], seq.colours[t]);

  std::vector<Letter> applied;  // in application order
  for (std::size_t j = 0; j < p; ++j)
    if (cur[j].first > 0) applied.push_back({Letter::Kind::E, static_cast<long>(j), cur[j].first});
  for (std::size_t j = 0; j < p; ++j) {
    const std::pair<long, long> want{seq.values[j], seq.colours[j]};
    std::size_t m = j;
    while (cur[m] != want) ++m;
    for (std::size_t t = m; t > j; --t) {
      std::swap(cur[t - 1], cur[t]);
      applied.push_back(s_letter(static_cast<long>(t - 1)));
    }
  }
  out.word.letters.assign(applied.rbegin(), applied.rend());
  const ColouredSequence replay = act(out.word, seed_sequence(out.signature));
  if (!(replay == seq)) throw std::logic_error("orbit word replays to " + to_text(replay));
  return out;
}

ColouredSequence random_sequence(long p, long k, long max_value, std::mt19937_64& rng) {
  const auto comps = odd_compositions(p, k);
  if (comps.empty()) throw std::invalid_argument("no odd composition of p into k parts");
  const auto& parts = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
  ColouredSequence s = seed_sequence({parts});
  std::shuffle(s.colours.begin(), s.colours.end(), rng);
  std::uniform_int_distribution<long> value(0, max_value);
  for (auto& v : s.values) v = value(rng);
  return s;
}

RelationReport verify_group_relations(long n, long k, long trials, std::uint64_t seed,
                                      std::optional<long> braid_exponent) {
  RelationReport report;
  const long p = 2 * n + 1;
  const long exponent = braid_exponent.value_or(p);
  std::mt19937_64 rng(seed);
  auto same_mod_t = [](const ColouredSequence& a, const ColouredSequence& b) {
    return to_standard(a).seq == to_standard(b).seq;
  };
  for (long trial = 0; trial < trials; ++trial) {
    const ColouredSequence s = random_sequence(p, k, 4, rng);
    auto record = [&](bool ok, const std::string& relation, const ColouredSequence& got) {
      ++report.checks;
      if (!ok) report.failures.push_back({relation, s, "gives " + to_text(got)});
    };
    ColouredSequence x = s;
    for (long r = 0; r < p; ++r) x = act_pi(x);
    record(same_mod_t(x, s), "pi^" + std::to_string(p), x);
    if (p < 3) continue;
    for (long i = 0; i < p; ++i) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>((i + 1) % p);
      const ColouredSequence twice = act_s(ui, act_s(ui, s));
      record(twice == s, "s" + std::to_string(i) + "^2", twice);
      ColouredSequence b = s;
      for (long r = 0; r < exponent; ++r) b = act_s(ui, act_s(uj, b));
      record(same_mod_t(b, s),
             "(s" + std::to_string(i) + " s" + std::to_string(uj) + ")^" + std::to_string(exponent), b);
      const ColouredSequence conj = act_pi(act_s(uj, act_pi_inverse(s)));
      record(same_mod_t(conj, act_s(ui, s)), "pi s" + std::to_string(uj) + " pi^-1 s" + std::to_string(i), conj);
    }
  }
  return report;
}

std::optional<IsotropyResult> isotropy_check(const ColouredSequence& seq) {
  const Degeneracy d = is_degenerate(seq);
  if (!d) return std::nullopt;
  IsotropyResult r;
  switch (d.kind) {
    case Degeneracy::Kind::consecutive_repeat:
    case Degeneracy::Kind::wrap:
      r.word.letters.push_back(s_letter(static_cast<long>(d.i)));
      break;
    case Degeneracy::Kind::non_consecutive_repeat:
      // The transposition (i j) as s_i ... s_{j-2} s_{j-1} s_{j-2} ... s_i.
      for (std::size_t t = d.i; t < d.j; ++t) r.word.letters.push_back(s_letter(static_cast<long>(t)));
      for (std::size_t t = d.j - 1; t-- > d.i;) r.word.letters.push_back(s_letter(static_cast<long>(t)));
      break;
    case Degeneracy::Kind::none:
      return std::nullopt;
  }
  r.sequence_fixed = act(r.word, seq) == seq;
  const DressingChainSolution chain = build_chain(seq);
  try {
    const DressingChainSolution moved = backlund(r.word, chain);
    r.solution_fixed = moved.w == chain.w && moved.a == chain.a;
  } catch (const SingularBacklund&) {
    r.solution_fixed = false;
  }
  return r;
}

}  // namespace ratsol
