#include <random>
#include <set>

#include "doctest.h"
#include "ratsol/maya.hpp"

using namespace ratsol;

namespace {

MayaDiagram random_diagram(std::mt19937_64& rng, long span = 8) {
  std::uniform_int_distribution<int> bit(0, 1);
  std::vector<long> holes, members;
  for (long x = -span; x < 0; ++x)
    if (bit(rng)) holes.push_back(x);
  for (long x = 0; x < span; ++x)
    if (bit(rng)) members.push_back(x);
  return MayaDiagram(holes, members);
}

// Membership oracle over a window, independent of the stored representation.
std::set<long> members_in(const MayaDiagram& m, long lo, long hi) {
  std::set<long> s;
  for (long x = lo; x < hi; ++x)
    if (m.contains(x)) s.insert(x);
  return s;
}

}  // namespace

TEST_CASE("Frobenius symbol and index") {
  MayaDiagram z;
  CHECK(frobenius(z) == FrobeniusSymbol{});
  CHECK(z.index() == 0);
  auto m = MayaDiagram::standard({1, 2, 4, 7, 8, 11});
  CHECK(frobenius(m).t == std::vector<long>{11, 8, 7, 4, 2, 1});
  CHECK(m.index() == 6);
  MayaDiagram h({-1}, {0});
  CHECK(frobenius(h) == FrobeniusSymbol{{0}, {0}});
  CHECK(h.index() == 0);
  CHECK_THROWS(from_frobenius({{1, 2}, {}}));
  CHECK_THROWS(from_frobenius({{}, {3, 3}}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    auto d = random_diagram(rng);
    CHECK(from_frobenius(frobenius(d)) == d);
  }
}

TEST_CASE("translation") {
  MayaDiagram z;
  CHECK(translate(z, 1) == MayaDiagram({}, {0}));
  auto g = xi({2, 3, 5, 7, 10});
  CHECK(translate(g, 2).index() == g.index() + 2);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> k(-6, 6);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    const long s = k(rng);
    auto e = translate(d, s);
    CHECK(translate(e, -s) == d);
    CHECK(e.index() - d.index() == s);
    for (long x = -12; x < 12; ++x) CHECK(e.contains(x + s) == d.contains(x));
  }
}

TEST_CASE("flips") {
  MayaDiagram z;
  CHECK(flip(z, 0) == MayaDiagram({}, {0}));
  auto m = xi({0, 1, 4});
  CHECK(flip(flip(m, 5), 5) == m);
  auto f = flip(m, 2);
  auto expect = members_in(m, -5, 10);
  expect.erase(2);
  CHECK(members_in(f, -5, 10) == expect);
  CHECK(f == MayaDiagram({}, {1, 3}));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pos(-10, 10);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    long a = pos(rng), b = pos(rng);
    CHECK(flip(flip(d, a), a) == d);
    CHECK(flip(flip(d, a), b) == flip(flip(d, b), a));
    CHECK(multi_flip(d, {a, b}) == flip(flip(d, a), b));
  }
}

TEST_CASE("block coordinates and genus") {
  CHECK(block_coordinates(MayaDiagram()) == std::vector<long>{0});
  CHECK(genus(MayaDiagram()) == 0);
  auto g = xi({2, 3, 5, 7, 10});
  CHECK(members_in(g, -3, 12) == std::set<long>{-3, -2, -1, 0, 1, 3, 4, 7, 8, 9});
  CHECK(block_coordinates(g) == std::vector<long>{2, 3, 5, 7, 10});
  CHECK(genus(g) == 2);
  CHECK(xi({0}) == MayaDiagram());
  CHECK(xi({1, 1, 3}) == xi({3}));
  CHECK_THROWS(xi({1, 2}));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto d = random_diagram(rng);
    CHECK(xi(block_coordinates(d)) == d);
    CHECK(block_coordinates(d).size() % 2 == 1);
    CHECK(cyclicity(d, 1) == 2 * genus(d) + 1);
  }
  std::uniform_int_distribution<int> e(-10, 10), n(0, 3);
  for (int t = 0; t < 200; ++t) {
    std::set<long> s;
    const int size = 2 * n(rng) + 1;
    while (static_cast<int>(s.size()) < size) s.insert(e(rng));
    std::vector<long> beta(s.begin(), s.end());
    CHECK(block_coordinates(xi(beta)) == beta);
  }
}

TEST_CASE("interlacing example with three colours") {
  auto m0 = xi({0, 1, 4}), m1 = xi({-1, 1, 3, 5, 6}), m2 = xi({5});
  auto m = interlace({m0, m1, m2});
  CHECK(block_coordinates(m) == std::vector<long>{-2, -1, 0, 2, 10, 11, 12, 14, 15, 16, 17});
  CHECK(genus(m) == 5);
  CHECK(flip_set_k(m, 3) == std::vector<long>{-2, 0, 3, 4, 10, 12, 16, 17, 19});
  CHECK(cyclic_signature(m, 3) == std::vector<long>{3, 5, 1});
  CHECK(cyclicity(m, 3) == 9);
  CHECK(modular_decompose(m, 3) == std::vector<MayaDiagram>{m0, m1, m2});
}

TEST_CASE("interlacing round trips and flip sets") {
  CHECK(interlace({xi({2, 5, 9})}) == xi({2, 5, 9}));
  CHECK(cyclicity(MayaDiagram(), 5) == 5);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> kk(1, 5);
  for (int t = 0; t < 200; ++t) {
    const long k = kk(rng);
    std::vector<MayaDiagram> parts;
    for (long i = 0; i < k; ++i) parts.push_back(random_diagram(rng, 5));
    CHECK(modular_decompose(interlace(parts), k) == parts);
    auto d = random_diagram(rng);
    CHECK(interlace(modular_decompose(d, k)) == d);
    auto gamma = flip_set_k(d, k);
    CHECK(multi_flip(d, gamma) == translate(d, k));
    CHECK(static_cast<long>(gamma.size()) == cyclicity(d, k));
  }
}

TEST_CASE("standard form") {
  auto s = to_standard(MayaDiagram({-3}, {0, 2}));
  CHECK(s.diagram.is_standard());
  CHECK(translate(MayaDiagram({-3}, {0, 2}), s.shift) == s.diagram);
  CHECK(to_standard(MayaDiagram::standard({1, 4})).shift == 0);
  CHECK(block_coordinates(s.diagram).front() == 0);
}

TEST_CASE("rendering") {
  CHECK(render(MayaDiagram({}, {1}), -2, 3) == "⬛⬛|⬜⬛⬜");
  CHECK(render(MayaDiagram()) == "⬛|⬜");
}

TEST_CASE("Wronskian labels") {
  CHECK(wronskian_label(MayaDiagram::standard({1, 2, 4, 7, 8, 11})) == "Wr(H1,H2,H4,H7,H8,H11)");
  CHECK(wronskian_label(MayaDiagram::standard({})) == "1");
  CHECK(wronskian_label(from_frobenius({{2}, {0}})) == "pWr(s=[2];t=[0])");
}
