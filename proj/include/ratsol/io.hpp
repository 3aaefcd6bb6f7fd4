#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ratsol/chains.hpp"
#include "ratsol/cycles.hpp"
#include "ratsol/numerics.hpp"
#include "ratsol/weyl.hpp"

namespace ratsol {

using Json = nlohmann::ordered_json;

struct SchemaError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// {"k": 3, "entries": [[4, 2], [3, 1], ...]}
Json to_json(const ColouredSequence& s);
ColouredSequence sequence_from_json(const Json& j);

// Coefficient strings, lowest degree first.
Json to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);
// Coefficients are "p/q" strings, or ["a", "b"] for a + b c with c^2 = radicand.
Json to_json(const EPoly& p);
EPoly epoly_from_json(const Json& j, const Rational& radicand);
Json to_json(const QRatFn& r);
QRatFn qratfn_from_json(const Json& j);
Json to_json(const ERatFn& r);
ERatFn eratfn_from_json(const Json& j, const Rational& radicand);

Json to_json(const MayaDiagram& m);
Json to_json(const MayaCycle& c);

// {"n", "k", "sequence", "mu", "sigma", "a", "alpha", "w", optional "f"}.
Json solution_json(const DressingChainSolution& s, bool include_f);
Json to_json(const PainleveSolution& p);

// Accepts a solution document: verifies w/a when present and f/alpha when present.
struct ParsedSolution {
  std::optional<DressingChainSolution> chain;
  std::optional<PainleveSolution> painleve;
};
ParsedSolution solution_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const RootSet& r);

}  // namespace ratsol
