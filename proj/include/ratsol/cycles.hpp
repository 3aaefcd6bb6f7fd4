#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratsol/maya.hpp"

namespace ratsol {

struct ColouredSequence {
  std::vector<long> values;   // nu
  std::vector<long> colours;  // C, residues in 0..k-1
  long k = 1;

  std::size_t size() const { return values.size(); }
  friend bool operator==(const ColouredSequence&, const ColouredSequence&) = default;
  friend auto operator<=>(const ColouredSequence&, const ColouredSequence&) = default;
};

struct InvalidSequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Shape checks (matching lengths, colours in range, k >= 1). Throws InvalidSequence.
void validate(const ColouredSequence& s);
bool is_oddly_coloured(const ColouredSequence& s);
// Throws unless validate passes, the length is odd and the colouring odd.
void require_odd_sequence(const ColouredSequence& s);
// Multiplicity of each colour.
std::vector<long> colour_signature(const ColouredSequence& s);

// mu_i = k nu_i + C_i, and its Euclidean inverse.
std::vector<long> flip_sequence(const ColouredSequence& s);
ColouredSequence from_flip_sequence(const std::vector<long>& mu, long k);

// Xi_k(nu, C): interlacing of Xi of each colour class.
MayaDiagram xi_k(const ColouredSequence& s);

struct MayaCycle {
  std::vector<MayaDiagram> diagrams;  // M_0 .. M_p, M_p = M_0 + k
  std::vector<long> mu;
  std::vector<int> sigma;             // -1 when mu_i is not in M_i
  long k = 1;

  std::size_t period() const { return mu.size(); }
  friend bool operator==(const MayaCycle&, const MayaCycle&) = default;
};

struct InvalidCycle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

MayaCycle cycle_from_flips(const MayaDiagram& m0, const std::vector<long>& mu, long k);
void validate(const MayaCycle& c);
MayaCycle build_cycle(const ColouredSequence& s);
ColouredSequence cycle_to_sequence(const MayaCycle& c);
MayaCycle translate(const MayaCycle& c, long j);

// Rotate left, the wrapped value gains 1; pi^p adds 1 to every value.
ColouredSequence pi_shift(const ColouredSequence& s);
ColouredSequence pi_inverse(const ColouredSequence& s);

// Unit translation of the cycle, i.e. mu -> mu + j.
ColouredSequence translate_T(const ColouredSequence& s, long j = 1);

bool is_standard(const ColouredSequence& s);
struct StandardizedSequence {
  ColouredSequence seq;
  long steps = 0;  // seq = T^steps(input)
};
StandardizedSequence to_standard(const ColouredSequence& s);

struct Degeneracy {
  enum class Kind { none, consecutive_repeat, non_consecutive_repeat, wrap };
  Kind kind = Kind::none;
  std::size_t i = 0, j = 0;
  explicit operator bool() const { return kind != Kind::none; }
};
Degeneracy is_degenerate(const ColouredSequence& s);
std::string describe(const Degeneracy& d);
ColouredSequence reduce_degenerate(const ColouredSequence& s, std::size_t i, std::size_t j);

// Compositions of p into k odd parts, lexicographic.
std::vector<std::vector<long>> odd_compositions(long p, long k);
struct SignatureGroup {
  long k;
  std::vector<std::vector<long>> compositions;
};
std::vector<SignatureGroup> enumerate_signatures(long p);
// F_1 = F_2 = 1.
long fibonacci(long n);
// C(n + (k-1)/2, k-1) with p = 2n+1.
long signature_count(long p, long k);

// Standard oddly coloured sequences with values in [0, bound], ordered by
// (signature, colour word, value word).
void enumerate_sequences(long p, long k, long bound, const std::function<void(const ColouredSequence&)>& emit);
std::vector<ColouredSequence> list_sequences(long p, long k, long bound);

// "4[2], 3[1], 0": value with bracketed colour; a bare value has colour 0.
std::string to_text(const ColouredSequence& s);
ColouredSequence parse_sequence_text(const std::string& text, long k);

}  // namespace ratsol
