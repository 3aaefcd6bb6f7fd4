#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratsol/cycles.hpp"
#include "ratsol/hermite.hpp"
#include "ratsol/ratfunc.hpp"

namespace ratsol {

struct DressingChainSolution {
  std::vector<QRatFn> w;
  std::vector<Rational> a;
  Rational delta;
  std::optional<MayaCycle> cycle;  // absent for hand-entered tuples
};

struct PainleveSolution {
  std::vector<ERatFn> f;
  std::vector<Rational> alpha;
  long k = 1;  // c^2 = -1/(2k)
};

struct RationalExtension {
  MayaDiagram diagram;
  QRatFn potential;
};

struct VerificationReport {
  struct Failure {
    long equation;  // -1 for the normalization conditions
    std::string message;
  };
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void fail(long equation, std::string message) { failures.push_back({equation, std::move(message)}); }
  void merge(const VerificationReport& o) { failures.insert(failures.end(), o.failures.begin(), o.failures.end()); }
};

// w_i = sigma_i z + (log H_{M_{i+1}})' - (log H_{M_i})', a_i = 2(mu_i - mu_{i+1}).
DressingChainSolution build_chain(const MayaCycle& c);
DressingChainSolution build_chain(const ColouredSequence& s);

// f_i(z) = c (w_i + w_{i+1})(cz), alpha_i = c^2 a_i.
PainleveSolution to_painleve(const DressingChainSolution& s);

// (w_i + w_{i+1})' + w_{i+1}^2 - w_i^2 = a_i, sum w = -(delta/2) z, sum a = -delta.
VerificationReport verify_chain(const DressingChainSolution& s);
// f_i' + f_i (sum_j f_{i+2j-1} - sum_j f_{i+2j}) = alpha_i, sum f = z, sum alpha = 1.
VerificationReport verify_painleve(const PainleveSolution& s);
// The same system for g_i = w_i + w_{i+1} with parameters a_i, over Q.
VerificationReport verify_unnormalized(const DressingChainSolution& s);

// U_M = z^2 - 2 (log H_M)'' + 2 s_M.
RationalExtension potential(const MayaDiagram& m);
// With w = sigma z + (log H_{phi(M)})' - (log H_M)' and lambda = 2 pos + 1:
// w' + w^2 = U_M - lambda and -w' + w^2 = U_{phi(M)} - lambda.
VerificationReport verify_riccati(const MayaDiagram& m, long pos);

// Numeric pole analysis of every w_i; see numerics.
struct ResidueReport {
  VerificationReport report;
  std::size_t poles = 0;
  long max_abs_residue = 0;
};
ResidueReport residue_properties(const DressingChainSolution& s, double tol, double even_power_tol = 1e-6,
                                 int precision_bits = 256);

}  // namespace ratsol
