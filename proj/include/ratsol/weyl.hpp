#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ratsol/chains.hpp"
#include "ratsol/cycles.hpp"

namespace ratsol {

// One letter of a group word: s_i, pi, pi^-1, or the shorthand E_i = s_i s_{i+1} ... s_{i+2n-1} pi.
struct Letter {
  enum class Kind { s, pi, pi_inv, E };
  Kind kind = Kind::s;
  long index = 0;
  long power = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Words act right to left: the last letter is applied first.
struct GroupWord {
  std::vector<Letter> letters;
  bool empty() const { return letters.empty(); }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

struct InvalidWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "s0 s1 pi pinv E3^2"; also accepts "pi^-1" and powers on any letter.
GroupWord parse_word(const std::string& text);
std::string to_string(const GroupWord& w);
std::string to_string(const Letter& l);
GroupWord inverse(const GroupWord& w);
// Rewrites E letters and powers into s_i, pi and pi^-1 for period p.
GroupWord expand(const GroupWord& w, std::size_t p);
void check_indices(const GroupWord& w, std::size_t p);

ColouredSequence act_s(std::size_t i, const ColouredSequence& seq);
ColouredSequence act_pi(const ColouredSequence& seq);
ColouredSequence act_pi_inverse(const ColouredSequence& seq);
// Evaluated through its defining word; throws std::logic_error if that differs from +e_i.
ColouredSequence act_E(std::size_t i, const ColouredSequence& seq);
ColouredSequence act(const Letter& g, const ColouredSequence& seq);
ColouredSequence act(const GroupWord& w, const ColouredSequence& seq);

MayaCycle act_on_cycle(const Letter& g, const MayaCycle& c);
MayaCycle act_on_cycle(const GroupWord& w, const MayaCycle& c);

struct SingularBacklund : std::domain_error {
  SingularBacklund(const std::string& what, std::size_t index) : std::domain_error(what), index(index) {}
  std::size_t index;
};
DressingChainSolution backlund(const Letter& g, const DressingChainSolution& s);
DressingChainSolution backlund(const GroupWord& w, const DressingChainSolution& s);

// Composition of 2n+1 into odd parts, one per colour.
struct SeedSignature {
  std::vector<long> parts;
};
void validate(const SeedSignature& sig);
SeedSignature signature_of(const ColouredSequence& seq);
ColouredSequence seed_sequence(const SeedSignature& sig);
PainleveSolution seed_solution(const SeedSignature& sig);

struct OrbitPath {
  SeedSignature signature;
  GroupWord word;
};
// E increments on the seed followed by adjacent transpositions; replayed before returning.
// Needs non-negative values.
OrbitPath orbit_path(const ColouredSequence& seq);

struct RelationReport {
  struct Failure {
    std::string relation;
    ColouredSequence witness;
    std::string detail;
  };
  std::vector<Failure> failures;
  long checks = 0;
  bool ok() const { return failures.empty(); }
};
// Random oddly coloured sequences with entries in 0..max_value.
ColouredSequence random_sequence(long p, long k, long max_value, std::mt19937_64& rng);
// s_i^2 = 1 exactly; (s_i s_{i+1})^exponent, pi^{2n+1} and pi s_{i+1} pi^-1 s_i^-1 are the identity
// modulo translations. exponent defaults to 2n+1.
RelationReport verify_group_relations(long n, long k, long trials, std::uint64_t seed,
                                      std::optional<long> braid_exponent = std::nullopt);

struct IsotropyResult {
  GroupWord word;
  bool sequence_fixed = false;
  bool solution_fixed = false;
};
std::optional<IsotropyResult> isotropy_check(const ColouredSequence& seq);

}  // namespace ratsol
