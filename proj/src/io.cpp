#include "ratsol/io.hpp"

namespace ratsol {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw SchemaError(std::string("missing field '") + name + "'");
  return j.at(name);
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<long>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::exception&) {
      throw SchemaError("bad rational '" + j.get<std::string>() + "'");
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw SchemaError("rationals must be strings such as \"-4/3\"");
}

Json rational_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(as_rational(x));
  return out;
}

}  // namespace

Json to_json(const ColouredSequence& s) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) entries.push_back(Json::array({s.values[i], s.colours[i]}));
  return Json{{"k", s.k}, {"entries", entries}};
}

ColouredSequence sequence_from_json(const Json& j) {
  ColouredSequence s{{}, {}, as_long(field(j, "k"), "k")};
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw SchemaError("entries must be an array");
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("each entry is [value, colour]");
    s.values.push_back(as_long(e[0], "value"));
    s.colours.push_back(as_long(e[1], "colour"));
  }
  validate(s);
  return s;
}

Json to_json(const QPoly& p) { return rational_list(p.coefficients()); }

QPoly qpoly_from_json(const Json& j) { return QPoly(rationals_from(j)); }

Json to_json(const EPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.is_rational())
      out.push_back(to_string(c.rational_part()));
    else
      out.push_back(Json::array({to_string(c.rational_part()), to_string(c.radical_part())}));
  }
  return out;
}

EPoly epoly_from_json(const Json& j, const Rational& radicand) {
  if (!j.is_array()) throw SchemaError("expected a coefficient array");
  std::vector<QuadExt> v;
  for (const auto& c : j) {
    if (c.is_array()) {
      if (c.size() != 2) throw SchemaError("extension coefficients are [rational, radical]");
      v.emplace_back(as_rational(c[0]), as_rational(c[1]), radicand);
    } else {
      v.emplace_back(as_rational(c), 0, radicand);
    }
  }
  return EPoly(std::move(v));
}

Json to_json(const QRatFn& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

QRatFn qratfn_from_json(const Json& j) {
  const QPoly den = qpoly_from_json(field(j, "den"));
  if (den.is_zero()) throw SchemaError("zero denominator");
  return QRatFn(qpoly_from_json(field(j, "num")), den);
}

Json to_json(const ERatFn& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

ERatFn eratfn_from_json(const Json& j, const Rational& radicand) {
  const EPoly den = epoly_from_json(field(j, "den"), radicand);
  if (den.is_zero()) throw SchemaError("zero denominator");
  return ERatFn(epoly_from_json(field(j, "num"), radicand), den);
}

Json to_json(const MayaDiagram& m) {
  const auto f = frobenius(m);
  return Json{{"s", f.s}, {"t", f.t}, {"index", m.index()}};
}

Json to_json(const MayaCycle& c) {
  Json diagrams = Json::array();
  for (const auto& d : c.diagrams) diagrams.push_back(to_json(d));
  return Json{{"k", c.k}, {"sequence", to_json(cycle_to_sequence(c))}, {"mu", c.mu}, {"sigma", c.sigma},
              {"diagrams", diagrams}};
}

Json solution_json(const DressingChainSolution& s, bool include_f) {
  Json out;
  out["n"] = (static_cast<long>(s.w.size()) - 1) / 2;
  const Rational half = s.delta / 2;
  out["k"] = half.get_den() == 1 ? Json(half.get_num().get_si()) : Json(to_string(half));
  if (s.cycle) {
    out["sequence"] = to_json(cycle_to_sequence(*s.cycle));
    out["mu"] = s.cycle->mu;
    out["sigma"] = s.cycle->sigma;
  }
  out["a"] = rational_list(s.a);
  Json w = Json::array();
  for (const auto& x : s.w) w.push_back(to_json(x));
  if (half.get_den() == 1 && sgn(half) > 0) {
    const auto p = to_painleve(s);
    out["alpha"] = rational_list(p.alpha);
    out["w"] = w;
    if (include_f) {
      Json f = Json::array();
      for (const auto& x : p.f) f.push_back(to_json(x));
      out["f"] = f;
    }
  } else {
    out["w"] = w;
  }
  return out;
}

Json to_json(const PainleveSolution& p) {
  Json f = Json::array();
  for (const auto& x : p.f) f.push_back(to_json(x));
  return Json{{"n", (static_cast<long>(p.f.size()) - 1) / 2}, {"k", p.k}, {"alpha", rational_list(p.alpha)}, {"f", f}};
}

ParsedSolution solution_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("a solution is a JSON object");
  ParsedSolution out;
  const Json& kj = field(j, "k");
  const Rational k = as_rational(kj);
  if (j.contains("w")) {
    DressingChainSolution s;
    for (const auto& x : j.at("w")) s.w.push_back(qratfn_from_json(x));
    s.a = rationals_from(field(j, "a"));
    s.delta = 2 * k;
    if (j.contains("sequence")) s.cycle = build_cycle(sequence_from_json(j.at("sequence")));
    out.chain = std::move(s);
  }
  if (j.contains("f")) {
    if (k.get_den() != 1 || sgn(k) <= 0) throw SchemaError("f needs a positive integer k");
    PainleveSolution p;
    p.k = k.get_num().get_si();
    const Rational radicand = scaled_radicand(p.k);
    for (const auto& x : j.at("f")) p.f.push_back(eratfn_from_json(x, radicand));
    p.alpha = rationals_from(field(j, "alpha"));
    out.painleve = std::move(p);
  }
  if (!out.chain && !out.painleve) throw SchemaError("a solution needs \"w\" and \"a\", or \"f\" and \"alpha\"");
  return out;
}

Json to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"equation", f.equation}, {"message", f.message}});
  return Json{{"ok", r.ok()}, {"failures", failures}};
}

Json to_json(const RootSet& r) {
  Json roots = Json::array();
  for (const auto& z : r.as_double()) roots.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"degree", r.source_degree}, {"residual_bound", r.residual_bound}, {"roots", roots}};
}

}  // namespace ratsol
