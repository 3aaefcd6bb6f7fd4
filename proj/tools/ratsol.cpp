// ratsol: enumerate, build and verify rational solutions of the odd-cyclic dressing chain.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ratsol/chains.hpp"
#include "ratsol/cycles.hpp"
#include "ratsol/hermite.hpp"
#include "ratsol/io.hpp"
#include "ratsol/numerics.hpp"
#include "ratsol/sweep.hpp"
#include "ratsol/weyl.hpp"

using namespace ratsol;

namespace {

enum class Status { ok, verification_failed, invalid_input };

int exit_code(Status s) {
  switch (s) {
    case Status::ok: return 0;
    case Status::verification_failed: return 2;
    case Status::invalid_input: return 3;
  }
  return 3;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::verification_failed: return "verification_failed";
    case Status::invalid_input: return "invalid_input";
  }
  return "invalid_input";
}

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Result {
  Status status = Status::ok;
  Json payload = Json::object();
  std::vector<std::string> diagnostics;
  // Replaces the JSON envelope for text, csv and svg output.
  std::optional<std::string> raw;
};

struct Globals {
  std::string format = "json";
  unsigned jobs = 0;
  std::uint64_t seed = 0;
};

void emit(const Result& r, const Globals& g) {
  if (g.format == "json" || !r.raw) {
    Json out{{"status", status_name(r.status)}, {"payload", r.payload}, {"diagnostics", r.diagnostics}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << *r.raw;
  for (const auto& d : r.diagnostics) std::cerr << d << "\n";
}

void require_format(const Globals& g, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (g.format == f) return;
  throw InvalidInput("format " + g.format + " is not available for this command");
}

std::string read_argument(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidInput("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

// A full command result is accepted wherever its payload is.
Json parse_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("status") && j.contains("payload")) return j.at("payload");
  return j;
}

// JSON document, @file, "-" for stdin, or text such as "4[2],3[1],1[2],2[2],0" with k.
ColouredSequence read_sequence(const std::string& arg, long k) {
  const std::string text = read_argument(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = parse_json(text);
    if (j.contains("sequence")) j = j.at("sequence");
    return sequence_from_json(j);
  }
  if (k < 1) throw InvalidInput("a text sequence needs --k");
  return parse_sequence_text(text, k);
}

std::string join(const std::vector<long>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

std::string sign_pattern(const std::vector<int>& sigma) {
  std::string out;
  for (int s : sigma) out += s > 0 ? '+' : '-';
  return out;
}

void add_report(Result& r, const VerificationReport& rep, const char* what) {
  r.payload[what] = to_json(rep);
  for (const auto& f : rep.failures) r.diagnostics.push_back(std::string(what) + ": " + f.message);
  if (!rep.ok()) r.status = Status::verification_failed;
}

// ---- enumerate ----

struct EnumerateArgs {
  long p = 1;
  long k = 0;
  long bound = -1;
  bool signatures = false;
  bool verify = false;
  bool list = false;
};

std::vector<long> ks_for(long p, long k) {
  if (p < 1 || p % 2 == 0) throw InvalidInput("p must be a positive odd integer");
  if (k != 0) {
    if (k < 1 || k % 2 == 0 || k > p) throw InvalidInput("k must be odd with 1 <= k <= p");
    return {k};
  }
  std::vector<long> out;
  for (long j = 1; j <= p; j += 2) out.push_back(j);
  return out;
}

Result cmd_enumerate(const EnumerateArgs& a, const Globals& g) {
  require_format(g, {"json", "text", "csv"});
  const auto ks = ks_for(a.p, a.k);
  Result r;
  std::ostringstream text;
  r.payload["p"] = a.p;
  if (a.signatures) {
    Json groups = Json::array();
    long total = 0;
    text << "p=" << a.p << "\n";
    for (const auto& grp : enumerate_signatures(a.p)) {
      if (a.k != 0 && grp.k != a.k) continue;
      Json comps = Json::array();
      for (const auto& c : grp.compositions) comps.push_back(c);
      groups.push_back(Json{{"k", grp.k}, {"count", grp.compositions.size()}, {"compositions", comps}});
      total += static_cast<long>(grp.compositions.size());
      text << "k=" << grp.k << " count=" << grp.compositions.size() << ":";
      for (const auto& c : grp.compositions) text << " (" << join(c) << ")";
      text << "\n";
    }
    r.payload["groups"] = groups;
    r.payload["total"] = total;
    text << "total=" << total << "\n";
    if (a.k == 0) r.payload["fibonacci"] = fibonacci(a.p);
    r.raw = text.str();
    if (g.format == "csv") throw InvalidInput("signatures have no csv form");
    return r;
  }
  if (a.bound < 0) throw InvalidInput("enumerate needs --bound or --signatures");
  std::vector<ColouredSequence> all;
  Json counts = Json::array();
  std::ostringstream csv;
  csv << "k,sequence\n";
  for (long k : ks) {
    auto seqs = list_sequences(a.p, k, a.bound);
    counts.push_back(Json{{"k", k}, {"count", seqs.size()}});
    text << "k=" << k << " count=" << seqs.size() << "\n";
    for (const auto& s : seqs) {
      if (a.list) text << "  (" << to_text(s) << ")\n";
      csv << k << ",\"" << to_text(s) << "\"\n";
    }
    all.insert(all.end(), seqs.begin(), seqs.end());
  }
  r.payload["bound"] = a.bound;
  r.payload["counts"] = counts;
  r.payload["total"] = all.size();
  if (a.list) {
    Json seqs = Json::array();
    for (const auto& s : all) seqs.push_back(to_json(s));
    r.payload["sequences"] = seqs;
  }
  if (a.verify) {
    const unsigned jobs = g.jobs ? g.jobs : std::max(1u, std::thread::hardware_concurrency());
    const SweepResult sw = verify_sweep(all, jobs);
    Json failures = Json::array();
    for (const auto& f : sw.failures) {
      failures.push_back(Json{{"sequence", to_json(f.sequence)}, {"message", f.message}});
      r.diagnostics.push_back("(" + to_text(f.sequence) + ") k=" + std::to_string(f.sequence.k) + ": " + f.message);
    }
    r.payload["verification"] = Json{{"instances", sw.instances}, {"failures", failures}, {"ok", sw.ok()}};
    if (!sw.ok()) r.status = Status::verification_failed;
    text << "verified " << sw.instances << " instances, " << sw.failures.size() << " failures\n";
  }
  r.raw = g.format == "csv" ? csv.str() : text.str();
  return r;
}

// ---- build ----

std::string describe_solution(const DressingChainSolution& s) {
  std::ostringstream out;
  if (s.cycle) {
    out << "sequence (" << to_text(cycle_to_sequence(*s.cycle)) << ") k=" << s.cycle->k << "\n";
    out << "mu = (" << join(s.cycle->mu) << ")\n";
    out << "sigma = (" << sign_pattern(s.cycle->sigma) << ")\n";
    for (std::size_t i = 0; i < s.cycle->period(); ++i)
      out << "M" << i << " -> " << wronskian_label(s.cycle->diagrams[i]) << "\n";
  }
  out << "a = (" << join(s.a) << ")\n";
  const Rational half = s.delta / 2;
  if (half.get_den() == 1 && sgn(half) > 0) out << "alpha = (" << join(to_painleve(s).alpha) << ")\n";
  for (std::size_t i = 0; i < s.w.size(); ++i) out << "w" << i << " = " << to_string(s.w[i]) << "\n";
  return out.str();
}

Json build_payload(const DressingChainSolution& s, bool with_f) {
  Json out = solution_json(s, with_f);
  if (s.cycle) {
    Json labels = Json::array();
    for (std::size_t i = 0; i < s.cycle->period(); ++i) labels.push_back(wronskian_label(s.cycle->diagrams[i]));
    out["wronskians"] = labels;
    out["cycle"] = to_json(*s.cycle);
  }
  return out;
}

Result cmd_build(const std::string& seq_arg, long k, bool with_f, const Globals& g) {
  require_format(g, {"json", "text"});
  Result r;
  ColouredSequence seq = read_sequence(seq_arg, k);
  require_odd_sequence(seq);
  if (!is_standard(seq)) {
    const auto st = to_standard(seq);
    r.diagnostics.push_back("notice: input is not standard; translated by T^" + std::to_string(st.steps) + " to (" +
                            to_text(st.seq) + ")");
    seq = st.seq;
  }
  if (const auto d = is_degenerate(seq)) r.diagnostics.push_back("notice: degenerate: " + describe(d));
  const auto s = build_chain(seq);
  r.payload = build_payload(s, with_f);
  add_report(r, verify_chain(s), "verify_chain");
  if (with_f) add_report(r, verify_painleve(to_painleve(s)), "verify_painleve");
  r.raw = describe_solution(s);
  return r;
}

// ---- verify ----

Result cmd_verify(const std::string& arg, const Globals& g) {
  require_format(g, {"json", "text"});
  Result r;
  const Json doc = parse_json(read_argument(arg));
  const ParsedSolution parsed = solution_from_json(doc);
  if (parsed.chain) add_report(r, verify_chain(*parsed.chain), "verify_chain");
  if (parsed.painleve) {
    add_report(r, verify_painleve(*parsed.painleve), "verify_painleve");
  } else if (parsed.chain && doc.contains("alpha")) {
    // alpha without f: check it against the f derived from w.
    const Rational half = parsed.chain->delta / 2;
    if (half.get_den() != 1 || sgn(half) <= 0) throw SchemaError("alpha needs a positive integer k");
    PainleveSolution p = to_painleve(*parsed.chain);
    std::vector<Rational> alpha;
    for (const auto& x : doc.at("alpha")) {
      if (!x.is_string()) throw SchemaError("rationals must be strings such as \"-4/3\"");
      alpha.push_back(parse_rational(x.get<std::string>()));
    }
    p.alpha = std::move(alpha);
    add_report(r, verify_painleve(p), "verify_painleve");
  }
  std::ostringstream text;
  text << status_name(r.status) << "\n";
  for (const auto& d : r.diagnostics) text << d << "\n";
  r.raw = text.str();
  if (g.format == "text") r.diagnostics.clear();
  return r;
}

// ---- act / orbit / seed ----

Result cmd_act(const std::string& word_text, const std::string& seq_arg, long k, bool build, bool with_f,
               const Globals& g) {
  require_format(g, {"json", "text"});
  Result r;
  const GroupWord w = parse_word(word_text);
  const ColouredSequence seq = read_sequence(seq_arg, k);
  require_odd_sequence(seq);
  check_indices(w, seq.size());
  const ColouredSequence out = act(w, seq);
  const auto st = to_standard(out);
  r.payload["word"] = to_string(w);
  r.payload["input"] = to_json(seq);
  r.payload["result"] = to_json(out);
  r.payload["standard"] = to_json(st.seq);
  r.payload["translation_steps"] = st.steps;
  std::ostringstream text;
  text << to_string(w) << " (" << to_text(seq) << ") = (" << to_text(out) << ")\n";
  text << "standard form (" << to_text(st.seq) << ") after T^" << st.steps << "\n";
  if (build) {
    const auto s = build_chain(out);
    r.payload["solution"] = build_payload(s, with_f);
    add_report(r, verify_chain(s), "verify_chain");
    text << describe_solution(s);
  }
  r.raw = text.str();
  return r;
}

Result cmd_orbit(const std::string& seq_arg, long k, const Globals& g) {
  require_format(g, {"json", "text"});
  Result r;
  const ColouredSequence seq = read_sequence(seq_arg, k);
  require_odd_sequence(seq);
  const OrbitPath path = orbit_path(seq);
  const ColouredSequence seed = seed_sequence(path.signature);
  const ColouredSequence replay = act(path.word, seed);
  r.payload["sequence"] = to_json(seq);
  r.payload["signature"] = path.signature.parts;
  r.payload["seed"] = to_json(seed);
  r.payload["word"] = to_string(path.word);
  r.payload["replay_ok"] = replay == seq;
  if (replay != seq) {
    r.status = Status::verification_failed;
    r.diagnostics.push_back("replay gives (" + to_text(replay) + ")");
  }
  std::ostringstream text;
  text << "signature (" << join(path.signature.parts) << ")\n";
  text << "seed (" << to_text(seed) << ")\n";
  text << "word " << (path.word.empty() ? std::string("id") : to_string(path.word)) << "\n";
  text << "replay " << (replay == seq ? "ok" : "FAILED") << "\n";
  r.raw = text.str();
  return r;
}

std::vector<long> parse_signature(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InvalidInput("bad signature entry '" + part + "'");
    }
  }
  return out;
}

Result cmd_seed(const std::string& signature, bool with_chain, const Globals& g) {
  require_format(g, {"json", "text"});
  Result r;
  SeedSignature sig{parse_signature(signature)};
  validate(sig);
  const ColouredSequence seq = seed_sequence(sig);
  const PainleveSolution p = seed_solution(sig);
  r.payload["signature"] = sig.parts;
  r.payload["sequence"] = to_json(seq);
  r.payload["painleve"] = to_json(p);
  add_report(r, verify_painleve(p), "verify_painleve");
  std::ostringstream text;
  text << "seed (" << to_text(seq) << ") k=" << seq.k << "\n";
  text << "alpha = (" << join(p.alpha) << ")\n";
  for (std::size_t i = 0; i < p.f.size(); ++i) text << "f" << i << " = " << to_string(p.f[i]) << "\n";
  if (with_chain) {
    const auto s = build_chain(seq);
    r.payload["solution"] = build_payload(s, false);
    add_report(r, verify_chain(s), "verify_chain");
  }
  r.raw = text.str();
  return r;
}

// ---- zeros ----

struct ZerosArgs {
  long hermite = -1;
  std::vector<long> generalized;
  std::vector<long> okamoto;
  std::string maya;
  std::string poly;
  int precision = 256;
};

MayaDiagram maya_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("s") || !j.contains("t")) throw SchemaError("a diagram is {\"s\": [...], \"t\": [...]}");
  FrobeniusSymbol f;
  try {
    f.s = j.at("s").get<std::vector<long>>();
    f.t = j.at("t").get<std::vector<long>>();
  } catch (const Json::exception&) {
    throw SchemaError("s and t must be integer arrays");
  }
  return from_frobenius(f);
}

Result cmd_zeros(const ZerosArgs& a, const Globals& g) {
  const int chosen = (a.hermite >= 0) + !a.generalized.empty() + !a.okamoto.empty() + !a.maya.empty() + !a.poly.empty();
  if (chosen != 1) throw InvalidInput("zeros needs exactly one of --hermite, --generalized-hermite, --okamoto, --maya, --poly");
  if (a.precision < 64) throw InvalidInput("--precision must be at least 64 bits");
  QPoly p;
  std::string label;
  auto check_pair = [](const std::vector<long>& v) {
    if (v[0] < 0 || v[1] < 0) throw InvalidInput("indices must be non-negative");
  };
  if (a.hermite >= 0) {
    p = hermite(a.hermite);
    label = "H_" + std::to_string(a.hermite);
  } else if (!a.generalized.empty()) {
    check_pair(a.generalized);
    p = generalized_hermite(a.generalized[0], a.generalized[1]);
    label = "H_{" + std::to_string(a.generalized[0]) + "," + std::to_string(a.generalized[1]) + "}";
  } else if (!a.okamoto.empty()) {
    check_pair(a.okamoto);
    p = generalized_okamoto(a.okamoto[0], a.okamoto[1]);
    label = "Q_{" + std::to_string(a.okamoto[0]) + "," + std::to_string(a.okamoto[1]) + "}";
  } else if (!a.maya.empty()) {
    const MayaDiagram m = maya_from_json(parse_json(read_argument(a.maya)));
    p = rescaled(m);
    label = wronskian_label(m);
  } else {
    p = qpoly_from_json(parse_json(read_argument(a.poly)));
    label = to_string(p);
  }
  if (p.is_zero()) throw InvalidInput("the zero polynomial has no root set");
  Result r;
  RootSet roots;
  try {
    roots = complex_roots(p, a.precision, g.seed);
  } catch (const NonConvergence& e) {
    roots = e.partial;
    r.status = Status::verification_failed;
    r.diagnostics.push_back(e.what());
  }
  r.payload["polynomial"] = label;
  r.payload["coefficients"] = to_json(p);
  r.payload["roots"] = to_json(roots);
  if (g.format == "csv") {
    r.raw = export_zeros(roots, ZeroFormat::csv);
  } else if (g.format == "svg") {
    r.raw = export_zeros(roots, ZeroFormat::svg);
  } else {
    std::ostringstream text;
    text << label << " degree " << roots.source_degree << "\n";
    char buf[96];
    for (const auto& z : roots.as_double()) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g\n", z.real(), z.imag());
      text << buf;
    }
    r.raw = text.str();
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational solutions of the odd-cyclic dressing chain and the A_2n Painleve system"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "csv", "svg"}));
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps (default: hardware threads)");
  app.add_option("--seed", g.seed, "Seed for the numeric root finder's starting points");

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List signatures or standard sequences");
  enumerate->add_option("--p", en.p, "Period 2n+1")->required();
  enumerate->add_option("--k", en.k, "Shift (odd, at most p); all when omitted");
  enumerate->add_option("--bound", en.bound, "Largest value");
  enumerate->add_flag("--signatures", en.signatures, "List colour signatures");
  enumerate->add_flag("--verify", en.verify, "Build and verify every listed solution");
  enumerate->add_flag("--list", en.list, "Print the sequences themselves");

  std::string seq_arg, word_arg, sig_arg, sol_arg;
  long k = 0;
  bool with_f = false, build_flag = false, with_chain = false;

  auto* build = app.add_subcommand("build", "Build and verify the solution of a coloured sequence");
  build->add_option("--seq", seq_arg, "Sequence JSON, @file, - or text like \"4[2],3[1],0\"")->required();
  build->add_option("--k", k, "Shift for text sequences");
  build->add_flag("--with-f", with_f, "Include the Painleve functions f");

  auto* verify = app.add_subcommand("verify", "Verify a solution document exactly");
  verify->add_option("--solution", sol_arg, "Solution JSON, @file or -")->required();

  auto* actc = app.add_subcommand("act", "Apply a group word to a sequence");
  actc->add_option("--word", word_arg, "Word such as \"s0 pi E1^2\"; rightmost letter acts first")->required();
  actc->add_option("--seq", seq_arg, "Sequence JSON, @file, - or text")->required();
  actc->add_option("--k", k, "Shift for text sequences");
  actc->add_flag("--build", build_flag, "Also build the resulting solution");
  actc->add_flag("--with-f", with_f, "Include f when building");

  auto* orbit = app.add_subcommand("orbit", "Word from the seed to a sequence");
  orbit->add_option("--seq", seq_arg, "Sequence JSON, @file, - or text")->required();
  orbit->add_option("--k", k, "Shift for text sequences");

  auto* seed = app.add_subcommand("seed", "Seed solution of an odd-part composition");
  seed->add_option("--signature", sig_arg, "Odd parts, e.g. 1,3,1")->required();
  seed->add_flag("--chain", with_chain, "Also emit the dressing chain form");

  ZerosArgs za;
  auto* zeros = app.add_subcommand("zeros", "Complex zeros of special polynomials");
  zeros->add_option("--hermite", za.hermite, "Hermite polynomial H_n");
  zeros->add_option("--generalized-hermite", za.generalized, "Generalized Hermite H_{m,n}")->expected(2);
  zeros->add_option("--okamoto", za.okamoto, "Generalized Okamoto Q_{m,n}")->expected(2);
  zeros->add_option("--maya", za.maya, "Pseudo-Wronskian of {\"s\": [...], \"t\": [...]}");
  zeros->add_option("--poly", za.poly, "Coefficient array, lowest degree first");
  zeros->add_option("--precision", za.precision, "Refinement precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code(Status::invalid_input);
  }

  Result r;
  try {
    if (*enumerate) r = cmd_enumerate(en, g);
    else if (*build) r = cmd_build(seq_arg, k, with_f, g);
    else if (*verify) r = cmd_verify(sol_arg, g);
    else if (*actc) r = cmd_act(word_arg, seq_arg, k, build_flag, with_f, g);
    else if (*orbit) r = cmd_orbit(seq_arg, k, g);
    else if (*seed) r = cmd_seed(sig_arg, with_chain, g);
    else r = cmd_zeros(za, g);
  } catch (const std::invalid_argument& e) {
    // SchemaError, InvalidSequence, InvalidWord, InvalidCycle and CLI-level input errors.
    r = Result{};
    r.status = Status::invalid_input;
    r.diagnostics.push_back(e.what());
    r.raw = std::string();
  } catch (const std::domain_error& e) {
    r = Result{};
    r.status = Status::invalid_input;
    r.diagnostics.push_back(e.what());
    r.raw = std::string();
  }
  emit(r, g);
  return exit_code(r.status);
}
