#include <random>
#include <set>

#include "doctest.h"
#include "ratsol/cycles.hpp"

using namespace ratsol;

namespace {

ColouredSequence seq(std::vector<long> v, std::vector<long> c, long k) { return {std::move(v), std::move(c), k}; }

const ColouredSequence worked = seq({4, 3, 1, 2, 0}, {2, 1, 2, 2, 0}, 3);

ColouredSequence random_odd_sequence(std::mt19937_64& rng, long p, long k, long lo = -3, long hi = 5) {
  std::uniform_int_distribution<long> val(lo, hi), col(0, k - 1);
  while (true) {
    ColouredSequence s{{}, {}, k};
    for (long i = 0; i < p; ++i) {
      s.values.push_back(val(rng));
      s.colours.push_back(col(rng));
    }
    if (is_oddly_coloured(s)) return s;
  }
}

}  // namespace

TEST_CASE("minimal cycle") {
  auto c = build_cycle(seq({0}, {0}, 1));
  CHECK(c.mu == std::vector<long>{0});
  CHECK(c.diagrams[0] == MayaDiagram());
  CHECK(c.diagrams[1] == translate(MayaDiagram(), 1));
  CHECK(c.sigma == std::vector<int>{-1});
}

TEST_CASE("worked (5,3) cycle") {
  auto c = build_cycle(worked);
  CHECK(c.mu == std::vector<long>{14, 10, 5, 8, 0});
  CHECK(c.sigma == std::vector<int>{-1, -1, -1, 1, -1});
  const std::vector<std::vector<long>> lists{{1, 2, 4, 7, 8, 11},
                                             {1, 2, 4, 7, 8, 11, 14},
                                             {1, 2, 4, 7, 8, 10, 11, 14},
                                             {1, 2, 4, 5, 7, 8, 10, 11, 14},
                                             {1, 2, 4, 5, 7, 10, 11, 14}};
  for (std::size_t i = 0; i < lists.size(); ++i) CHECK(c.diagrams[i] == MayaDiagram::standard(lists[i]));
  CHECK(cycle_to_sequence(c) == worked);
  CHECK(!is_degenerate(worked));
}

TEST_CASE("Euclidean decomposition of flips") {
  CHECK(from_flip_sequence({14, 10, 5, 8, 0}, 3) == worked);
  CHECK(from_flip_sequence({0}, 1) == seq({0}, {0}, 1));
  CHECK(from_flip_sequence({-2}, 3) == seq({-1}, {1}, 3));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(build_cycle(seq({0, 0}, {0, 0}, 1)), InvalidSequence);
  CHECK_THROWS_AS(build_cycle(seq({0, 1, 2}, {0, 1, 1}, 3)), InvalidSequence);
  CHECK_THROWS_AS(build_cycle(seq({0}, {3}, 3)), InvalidSequence);
  auto c = build_cycle(worked);
  c.sigma[0] = 1;
  CHECK_THROWS_AS(validate(c), InvalidCycle);
  CHECK_THROWS_AS(cycle_from_flips(MayaDiagram(), {0, 1}, 1), InvalidCycle);
}

TEST_CASE("pi shift") {
  CHECK(pi_shift(worked) == seq({3, 1, 2, 0, 5}, {1, 2, 2, 0, 2}, 3));
  CHECK(pi_shift(seq({0}, {0}, 1)) == seq({1}, {0}, 1));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto s = random_odd_sequence(rng, 5, 3);
    auto r = s;
    for (int i = 0; i < 5; ++i) r = pi_shift(r);
    auto expect = s;
    for (auto& v : expect.values) ++v;
    CHECK(r == expect);
    CHECK(pi_inverse(pi_shift(s)) == s);
    // M_i of the cycle equals Xi_k(pi^i(s)).
    auto c = build_cycle(s);
    auto u = s;
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(c.diagrams[i] == xi_k(u));
      u = pi_shift(u);
    }
  }
}

TEST_CASE("unit translation") {
  CHECK(translate_T(worked) == seq({5, 3, 2, 3, 0}, {0, 2, 0, 0, 1}, 3));
  CHECK(translate_T(seq({1, 4, 2}, {0, 0, 0}, 1)) == seq({2, 5, 3}, {0, 0, 0}, 1));
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    auto s = random_odd_sequence(rng, t % 2 ? 5 : 3, t % 3 == 0 ? 1 : 3);
    auto a = build_cycle(s), b = build_cycle(translate_T(s));
    for (std::size_t i = 0; i < a.diagrams.size(); ++i) CHECK(b.diagrams[i] == translate(a.diagrams[i], 1));
    CHECK(translate_T(translate_T(s), -1) == s);
  }
}

TEST_CASE("standard form") {
  auto st = to_standard(worked);
  CHECK(st.seq == worked);
  CHECK(st.steps == 0);
  auto back = to_standard(translate_T(worked));
  CHECK(back.seq == worked);
  CHECK(back.steps == -1);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    auto s = random_odd_sequence(rng, 5, t % 2 ? 3 : 5);
    auto a = to_standard(s);
    CHECK(is_standard(a.seq));
    CHECK(to_standard(a.seq).steps == 0);
    CHECK(translate_T(s, a.steps) == a.seq);
  }
}

TEST_CASE("round trip through cycles") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const long k = std::vector<long>{1, 3, 5}[t % 3];
    auto s = random_odd_sequence(rng, t % 2 ? 7 : 5, k, -4, 6);
    auto c = build_cycle(s);
    CHECK(cycle_to_sequence(c) == s);
    CHECK(cycle_from_flips(c.diagrams[0], c.mu, k) == c);
    CHECK(c.diagrams.back() == translate(c.diagrams.front(), k));
    for (std::size_t i = 0; i < c.mu.size(); ++i) CHECK((c.sigma[i] == -1) == !c.diagrams[i].contains(c.mu[i]));
    const long cyc = cyclicity(c.diagrams[0], k), len = static_cast<long>(s.size());
    std::set<long> distinct(c.mu.begin(), c.mu.end());
    if (distinct.size() == c.mu.size()) CHECK(cyc == len);
    CHECK(cyc <= len);
    CHECK((len - cyc) % 2 == 0);
  }
}

TEST_CASE("degenerate sequences") {
  auto d1 = seq({0, 1, 1, 1, 0}, {0, 1, 0, 0, 2}, 3);
  CHECK(flip_sequence(d1) == std::vector<long>{0, 4, 3, 3, 2});
  auto w1 = is_degenerate(d1);
  CHECK(w1.kind == Degeneracy::Kind::consecutive_repeat);
  CHECK(w1.i == 2);
  CHECK(w1.j == 3);
  auto d2 = seq({0, 1, 1, 1, 0}, {0, 0, 1, 0, 2}, 3);
  CHECK(flip_sequence(d2) == std::vector<long>{0, 3, 4, 3, 2});
  auto w2 = is_degenerate(d2);
  CHECK(w2.kind == Degeneracy::Kind::non_consecutive_repeat);
  const auto reduced = seq({0, 1, 0}, {0, 1, 2}, 3);
  CHECK(reduce_degenerate(d1, w1.i, w1.j) == reduced);
  CHECK(reduce_degenerate(d2, w2.i, w2.j) == reduced);
  CHECK(is_oddly_coloured(reduced));
  CHECK_THROWS(reduce_degenerate(d1, 0, 1));
  CHECK(is_degenerate(seq({0, 0, 0}, {0, 0, 0}, 1)).kind == Degeneracy::Kind::consecutive_repeat);
  CHECK(is_degenerate(seq({0, 2, 1}, {0, 0, 0}, 1)).kind == Degeneracy::Kind::wrap);
}

TEST_CASE("signatures and Fibonacci counts") {
  auto groups = enumerate_signatures(5);
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].compositions == std::vector<std::vector<long>>{{5}});
  CHECK(groups[1].compositions == std::vector<std::vector<long>>{{1, 1, 3}, {1, 3, 1}, {3, 1, 1}});
  CHECK(groups[2].compositions == std::vector<std::vector<long>>{{1, 1, 1, 1, 1}});
  CHECK(enumerate_signatures(1)[0].compositions == std::vector<std::vector<long>>{{1}});
  CHECK_THROWS(enumerate_signatures(4));
  // Brute-force oracle: all compositions of p, keep those with only odd parts.
  for (long p = 1; p <= 13; p += 2) {
    long brute = 0;
    for (long mask = 0; mask < (1L << (p - 1)); ++mask) {
      long part = 1;
      bool ok = true;
      for (long b = 0; b < p - 1; ++b) {
        if (mask & (1L << b)) {
          ok = ok && part % 2 == 1;
          part = 1;
        } else {
          ++part;
        }
      }
      ok = ok && part % 2 == 1;
      if (ok) ++brute;
    }
    long total = 0;
    for (const auto& g : enumerate_signatures(p)) {
      CHECK(static_cast<long>(g.compositions.size()) == signature_count(p, g.k));
      total += static_cast<long>(g.compositions.size());
    }
    CHECK(total == brute);
    CHECK(total == fibonacci(p));
  }
  CHECK(fibonacci(7) == 13);
  CHECK(fibonacci(13) == 233);
}

TEST_CASE("sequence enumeration") {
  CHECK(list_sequences(1, 1, 0) == std::vector<ColouredSequence>{seq({0}, {0}, 1)});
  for (auto [p, k, bound] : std::vector<std::tuple<long, long, long>>{{3, 1, 1}, {3, 3, 1}, {3, 3, 2}, {5, 3, 1}}) {
    // Filter all tuples with the general standard-form test.
    std::set<ColouredSequence> brute;
    const long cells = p;
    long total = 1;
    for (long i = 0; i < cells; ++i) total *= (bound + 1) * k;
    for (long code = 0; code < total; ++code) {
      ColouredSequence s{{}, {}, k};
      long c = code;
      for (long i = 0; i < p; ++i) {
        s.values.push_back(c % (bound + 1));
        c /= bound + 1;
        s.colours.push_back(c % k);
        c /= k;
      }
      auto sig = colour_signature(s);
      bool all_present = true;
      for (long x : sig) all_present = all_present && x > 0;
      if (all_present && is_oddly_coloured(s) && is_standard(s)) brute.insert(s);
    }
    auto listed = list_sequences(p, k, bound);
    CHECK(std::set<ColouredSequence>(listed.begin(), listed.end()) == brute);
    CHECK(listed.size() == brute.size());
    for (const auto& s : listed) CHECK(to_standard(s).steps == 0);
  }
  CHECK(list_sequences(3, 1, 4).size() == 49);
  CHECK(list_sequences(3, 3, 4).size() == 150);
  CHECK_THROWS(list_sequences(3, 2, 1));
}

TEST_CASE("text form") {
  CHECK(to_text(worked) == "4[2], 3[1], 1[2], 2[2], 0[0]");
  CHECK(parse_sequence_text("4[2],3[1],1[2],2[2],0", 3) == worked);
  CHECK(parse_sequence_text("(4[2], 3[1], 1[2], 2[2], 0[0])", 3) == worked);
  CHECK_THROWS(parse_sequence_text("4[5]", 3));
  CHECK_THROWS(parse_sequence_text("x", 3));
}
