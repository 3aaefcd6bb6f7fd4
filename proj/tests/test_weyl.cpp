#include <random>

#include "doctest.h"
#include "ratsol/weyl.hpp"

using namespace ratsol;

namespace {

ColouredSequence seq(std::vector<long> v, std::vector<long> c, long k) { return {std::move(v), std::move(c), k}; }

const ColouredSequence worked = seq({4, 3, 1, 2, 0}, {2, 1, 2, 2, 0}, 3);
const ColouredSequence seed131 = seq({0, 0, 0, 0, 0}, {0, 1, 1, 1, 2}, 3);

Letter S(long i) { return {Letter::Kind::s, i, 1}; }
const Letter PI{Letter::Kind::pi, 0, 1};
const Letter PINV{Letter::Kind::pi_inv, 0, 1};

std::vector<Letter> generators(long p) {
  std::vector<Letter> g{PI, PINV};
  if (p > 1)
    for (long i = 0; i < p; ++i) g.push_back(S(i));
  return g;
}

bool same_cycle(const MayaCycle& a, const MayaCycle& b) { return a.mu == b.mu && a.diagrams == b.diagrams; }

std::vector<Rational> rats(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(parse_rational(x));
  return out;
}

ERatFn zfrac(const char* zcoef, long inv_z_coef, long k) {
  // zcoef * z + inv_z_coef / z
  QRatFn r = z_times(parse_rational(zcoef));
  if (inv_z_coef) r = r + QRatFn(QPoly::constant(Rational(inv_z_coef)), QPoly::monomial(1, 1));
  const Rational d = scaled_radicand(k);
  return ERatFn(lift(r.num(), d), lift(r.den(), d));
}

}  // namespace

TEST_CASE("generators on sequences") {
  CHECK(act_s(0, worked) == seq({3, 4, 1, 2, 0}, {1, 2, 2, 2, 0}, 3));
  CHECK(act_s(0, seed131) == seq({0, 0, 0, 0, 0}, {1, 0, 1, 1, 2}, 3));
  CHECK(act_s(4, seed131) == seq({-1, 0, 0, 0, 1}, {2, 1, 1, 1, 0}, 3));
  CHECK(act_pi(worked) == pi_shift(worked));
  CHECK_THROWS_AS(act_s(5, worked), std::out_of_range);
  CHECK_THROWS(act_s(0, seq({0}, {0}, 1)));
}

TEST_CASE("E operators are slot increments") {
  CHECK(act_E(1, seq({2, 3, 0}, {0, 1, 2}, 3)) == seq({2, 4, 0}, {0, 1, 2}, 3));
  CHECK(act_E(0, seq({0}, {0}, 1)) == seq({1}, {0}, 1));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const long p = std::vector<long>{1, 3, 5, 7}[t % 4];
    const long k = std::min<long>(p, 1 + 2 * (t % 3));
    const auto s = random_sequence(p, k, 4, rng);
    const auto i = static_cast<std::size_t>(t % p);
    auto direct = s;
    direct.values[i] += 1;
    CHECK(act_E(i, s) == direct);
  }
  // E_i E_j = E_j E_i
  const auto a = act(parse_word("E0 E3"), worked), b = act(parse_word("E3 E0"), worked);
  CHECK(a == b);
  CHECK(act(parse_word("E2^-1 E2"), worked) == worked);
}

TEST_CASE("words") {
  const auto w = parse_word("s0 s1 pi pinv E3^2");
  REQUIRE(w.letters.size() == 5);
  CHECK(w.letters[4] == Letter{Letter::Kind::E, 3, 2});
  CHECK(to_string(w) == "s0 s1 pi pinv E3^2");
  CHECK(parse_word("pi^-1").letters[0] == Letter{Letter::Kind::pi, 0, -1});
  CHECK(act(parse_word("pi^-1"), worked) == act_pi_inverse(worked));
  CHECK_THROWS_AS(parse_word("t2"), InvalidWord);
  CHECK_THROWS_AS(act(parse_word("s7"), worked), InvalidWord);
  // Right-to-left: s0 pi applies pi first.
  CHECK(act(parse_word("s0 pi"), worked) == act_s(0, act_pi(worked)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto s = random_sequence(5, 3, 4, rng);
    const auto g = parse_word("s1 E2 pi s4 pinv^2 s0");
    CHECK(act(inverse(g), act(g, s)) == s);
  }
}

TEST_CASE("generators on cycles") {
  const auto c = build_cycle(worked);
  CHECK(act_on_cycle(S(0), c).mu == std::vector<long>{10, 14, 5, 8, 0});
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const long p = 1 + 2 * (t % 3);
    const long k = 1 + 2 * (t % ((p + 1) / 2));
    const auto cyc = build_cycle(random_sequence(p, k, 4, rng));
    CHECK(same_cycle(act_on_cycle(PINV, act_on_cycle(PI, cyc)), cyc));
  }
}

TEST_CASE("cycle action matches the sequence action") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const long p = std::vector<long>{1, 3, 5}[t % 3];
    const long k = std::vector<long>{1, 3, 5}[(t / 3) % 3];
    if (k > p) continue;
    const auto s = random_sequence(p, k, 4, rng);
    for (const auto& g : generators(p)) {
      const auto lhs = act_on_cycle(g, build_cycle(s));
      const auto rhs = build_cycle(act(g, s));
      CHECK_MESSAGE(same_cycle(lhs, rhs), to_text(s) << " under " << to_string(g));
    }
  }
}

TEST_CASE("Backlund transformations match the cycle action") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const long p = std::vector<long>{3, 5}[t % 2];
    const long k = std::vector<long>{1, 3}[(t / 2) % 2];
    const auto c = build_cycle(random_sequence(p, k, 3, rng));
    const auto chain = build_chain(c);
    for (const auto& g : generators(p)) {
      const auto moved = backlund(g, chain);
      const auto built = build_chain(act_on_cycle(g, c));
      CHECK(moved.w == built.w);
      CHECK(moved.a == built.a);
      CHECK(verify_chain(moved).ok());
    }
  }
}

TEST_CASE("seed chains under s0 and s4") {
  const auto chain = build_chain(seed131);
  const auto p0 = to_painleve(backlund(S(0), chain));
  CHECK(p0.f == std::vector<ERatFn>{zfrac("1/3", 0, 3), zfrac("0", -1, 3), ERatFn(), zfrac("1/3", 0, 3), zfrac("1/3", 1, 3)});
  CHECK(p0.alpha == rats({"-1/3", "1/3", "0", "1/3", "2/3"}));
  CHECK(to_painleve(build_chain(act_s(0, seed131))).f == p0.f);
  const auto p4 = to_painleve(backlund(S(4), chain));
  CHECK(p4.f == std::vector<ERatFn>{zfrac("1/3", -1, 3), ERatFn(), ERatFn(), zfrac("1/3", 1, 3), zfrac("1/3", 0, 3)});
  CHECK(p4.alpha == rats({"2/3", "0", "0", "2/3", "-1/3"}));
}

TEST_CASE("singular steps are errors") {
  DressingChainSolution s;
  s.w = {z_times(1), z_times(-1), z_times(-1)};
  s.a = rats({"1", "0", "0"});
  s.delta = 2;
  try {
    backlund(S(0), s);
    FAIL("expected a singular step");
  } catch (const SingularBacklund& e) {
    CHECK(e.index == 0);
  }
}

TEST_CASE("seed solutions") {
  const auto p = seed_solution({{1, 3, 1}});
  CHECK(p.f == std::vector<ERatFn>{zfrac("1/3", 0, 3), ERatFn(), ERatFn(), zfrac("1/3", 0, 3), zfrac("1/3", 0, 3)});
  CHECK(p.alpha == rats({"1/3", "0", "0", "1/3", "1/3"}));
  const auto one = seed_solution({{1}});
  CHECK(one.f == std::vector<ERatFn>{zfrac("1", 0, 1)});
  CHECK(one.alpha == rats({"1"}));
  for (long q : {1, 3, 5, 7})
    for (const auto& group : enumerate_signatures(q))
      for (const auto& parts : group.compositions) {
        const SeedSignature sig{parts};
        const auto direct = seed_solution(sig);
        const auto built = to_painleve(build_chain(build_cycle(seed_sequence(sig))));
        CHECK(direct.f == built.f);
        CHECK(direct.alpha == built.alpha);
        CHECK(verify_painleve(direct).ok());
      }
  CHECK_THROWS(seed_solution({{2, 3}}));
}

TEST_CASE("orbit paths") {
  CHECK(orbit_path(seed131).word.empty());
  const auto target = seq({2, 3, 0}, {0, 1, 2}, 3);
  const auto path = orbit_path(target);
  CHECK(to_string(path.word) == "E1^3 E0^2");
  CHECK(act(path.word, seed_sequence(path.signature)) == target);
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 100) {
    const long p = std::vector<long>{1, 3, 5}[checked % 3];
    const long k = std::min<long>(p, std::vector<long>{1, 3, 5}[(checked / 3) % 3]);
    const auto s = to_standard(random_sequence(p, k, 4, rng)).seq;
    if (*std::min_element(s.values.begin(), s.values.end()) < 0) continue;
    const auto path2 = orbit_path(s);
    CHECK(act(path2.word, seed_sequence(path2.signature)) == s);
    ++checked;
  }
  CHECK_THROWS(orbit_path(act_s(4, seed131)));
}

TEST_CASE("group relations") {
  CHECK(verify_group_relations(1, 1, 50, 1).ok());
  CHECK(verify_group_relations(1, 3, 50, 2).ok());
  CHECK(verify_group_relations(2, 3, 50, 3, 3).ok());
  CHECK(verify_group_relations(2, 5, 50, 4, 3).ok());
  // (s_i s_{i+1}) has order three, so the fifth power is not a translation.
  const auto five = verify_group_relations(2, 3, 10, 5);
  CHECK(!five.ok());
  for (const auto& f : five.failures) CHECK(f.relation.find(")^5") != std::string::npos);
}

TEST_CASE("signature invariance") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 50; ++t) {
    const auto s = random_sequence(5, 3, 4, rng);
    for (const auto& g : generators(5)) CHECK(signature_of(act(g, s)).parts == signature_of(s).parts);
    // T shifts every colour by one, rotating the signature.
    auto parts = signature_of(s).parts;
    std::rotate(parts.rbegin(), parts.rbegin() + 1, parts.rend());
    CHECK(signature_of(translate_T(s)).parts == parts);
  }
}

TEST_CASE("isotropy") {
  const auto f1 = seq({0, 1, 1, 1, 0}, {0, 1, 0, 0, 2}, 3);
  const auto r1 = isotropy_check(f1);
  REQUIRE(r1);
  CHECK(to_string(r1->word) == "s2");
  CHECK(r1->sequence_fixed);
  CHECK(r1->solution_fixed);
  const auto sol = to_painleve(build_chain(f1));
  CHECK(to_painleve(backlund(S(2), build_chain(f1))).f == sol.f);

  CHECK(!isotropy_check(worked));

  const auto r2 = isotropy_check(from_flip_sequence({0, 3, 4, 3, 2}, 3));
  REQUIRE(r2);
  CHECK(r2->word.letters.size() > 1);
  CHECK(r2->sequence_fixed);
  CHECK(r2->solution_fixed);
}
