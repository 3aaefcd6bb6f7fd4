#include "doctest.h"

#include "oracles.hpp"
#include "ratsol/io.hpp"
#include "ratsol/sweep.hpp"

using namespace ratsol;
using oracle::poly;

namespace {

const ColouredSequence worked{{4, 3, 1, 2, 0}, {2, 1, 2, 2, 0}, 3};

}  // namespace

TEST_CASE("sequence JSON round trip") {
  const Json j = to_json(worked);
  CHECK(j.dump() == R"({"k":3,"entries":[[4,2],[3,1],[1,2],[2,2],[0,0]]})");
  CHECK(sequence_from_json(j) == worked);
  CHECK(sequence_from_json(Json::parse(j.dump())) == worked);
  CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"entries":[[0,0]]})")), SchemaError);
  CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"k":3,"entries":[[0]]})")), SchemaError);
  CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"k":3,"entries":[[0,3]]})")), InvalidSequence);
  CHECK_THROWS_AS(sequence_from_json(Json::parse(R"({"k":3,"entries":[[0.5,1]]})")), SchemaError);
}

TEST_CASE("polynomial and rational function round trips") {
  const QPoly p(std::vector<Rational>{Rational(-1, 3), Rational(0), Rational(7, 2)});
  CHECK(to_json(p).dump() == R"(["-1/3","0","7/2"])");
  CHECK(qpoly_from_json(to_json(p)) == p);
  CHECK(qpoly_from_json(Json::array()).is_zero());
  CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"(["1/0"])")), SchemaError);
  CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"(["x"])")), SchemaError);
  CHECK_THROWS_AS(qpoly_from_json(Json::parse(R"([1.5])")), SchemaError);

  const QRatFn r(poly({1, 2}), poly({0, 0, 3}));
  CHECK(qratfn_from_json(to_json(r)) == r);
  CHECK_THROWS_AS(qratfn_from_json(Json::parse(R"({"num":["1"],"den":[]})")), SchemaError);

  const Rational d = scaled_radicand(3);
  const EPoly e(std::vector<QuadExt>{QuadExt(Rational(1), Rational(2, 5), d), QuadExt(Rational(0), Rational(0), d),
                                     QuadExt(Rational(-3), Rational(0), d)});
  const Json ej = to_json(e);
  CHECK(ej.dump() == R"([["1","2/5"],"0","-3"])");
  CHECK(epoly_from_json(ej, d) == e);
  const ERatFn er(e, lift(poly({1, 1}), d));
  CHECK(eratfn_from_json(to_json(er), d) == er);
}

TEST_CASE("diagrams and cycles serialize through the Frobenius symbol") {
  const auto c = build_cycle(worked);
  const Json j = to_json(c);
  CHECK(j["mu"] == Json::parse("[14,10,5,8,0]"));
  CHECK(j["sigma"] == Json::parse("[-1,-1,-1,1,-1]"));
  CHECK(j["diagrams"].size() == 6);
  CHECK(sequence_from_json(j["sequence"]) == worked);
  for (std::size_t i = 0; i < c.diagrams.size(); ++i) {
    const Json& d = j["diagrams"][i];
    FrobeniusSymbol f{d["s"].get<std::vector<long>>(), d["t"].get<std::vector<long>>()};
    CHECK(from_frobenius(f) == c.diagrams[i]);
    CHECK(d["index"].get<long>() == c.diagrams[i].index());
  }
}

TEST_CASE("solution documents round trip and still verify") {
  const auto s = build_chain(worked);
  const Json doc = solution_json(s, true);
  CHECK(doc["k"] == 3);
  CHECK(doc["a"] == Json::parse(R"(["8","10","-6","16","-34"])"));
  CHECK(doc["alpha"] == Json::parse(R"(["-4/3","-5/3","1","-8/3","17/3"])"));

  const auto parsed = solution_from_json(Json::parse(doc.dump()));
  REQUIRE(parsed.chain);
  REQUIRE(parsed.painleve);
  CHECK(parsed.chain->w == s.w);
  CHECK(parsed.chain->a == s.a);
  CHECK(parsed.chain->delta == s.delta);
  CHECK(parsed.chain->cycle == s.cycle);
  CHECK(verify_chain(*parsed.chain).ok());
  CHECK(verify_painleve(*parsed.painleve).ok());
  CHECK(parsed.painleve->f == to_painleve(s).f);

  const PainleveSolution p = to_painleve(s);
  const auto again = solution_from_json(to_json(p));
  REQUIRE(again.painleve);
  CHECK(again.painleve->f == p.f);
  CHECK(again.painleve->alpha == p.alpha);
  CHECK(!again.chain);

  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"k":3})")), SchemaError);
  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"k":3,"w":[]})")), SchemaError);
  CHECK_THROWS_AS(solution_from_json(Json::parse(R"({"k":"1/2","f":[],"alpha":[]})")), SchemaError);
  CHECK_THROWS_AS(solution_from_json(Json::parse("[1,2]")), SchemaError);
}

TEST_CASE("verification reports serialize every failure") {
  VerificationReport r;
  CHECK(to_json(r).dump() == R"({"ok":true,"failures":[]})");
  r.fail(0, "equation 0 residual 1");
  r.fail(-1, "sum of alpha is 2");
  const Json j = to_json(r);
  CHECK(j["ok"] == false);
  CHECK(j["failures"].size() == 2);
  CHECK(j["failures"][0]["equation"] == 0);
  CHECK(j["failures"][1]["equation"] == -1);
}

TEST_CASE("small sweep over disjoint partitions") {
  const auto inputs = sweep_inputs(3, 1);
  long expected = 0;
  for (long k : {1L, 3L}) expected += static_cast<long>(list_sequences(3, k, 1).size());
  CHECK(static_cast<long>(inputs.size()) == expected);

  long last = 0;
  const auto r = verify_sweep(inputs, 2, [&](long done) { last = std::max(last, done); });
  CHECK(r.ok());
  CHECK(r.instances == expected);
  CHECK(last == expected);

  // A malformed input is reported in place and does not stop the others.
  auto bad = inputs;
  bad.insert(bad.begin() + 3, ColouredSequence{{0, 0, 0}, {0, 0, 1}, 2});
  const auto rb1 = verify_sweep(bad, 1);
  const auto rb3 = verify_sweep(bad, 3);
  REQUIRE(rb1.failures.size() == 1);
  REQUIRE(rb3.failures.size() == 1);
  CHECK(rb1.failures[0].sequence == bad[3]);
  CHECK(rb3.failures[0].sequence == bad[3]);
  CHECK(rb1.instances == expected + 1);
}
