#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace ratsol {

// A set of integers containing all sufficiently negative integers and
// finitely many nonnegative ones, stored as its negative holes and its
// nonnegative members (both ascending).
class MayaDiagram {
 public:
  MayaDiagram() = default;  // Z_- = {..., -2, -1}
  MayaDiagram(std::vector<long> negative_holes, std::vector<long> nonnegative_members);

  // Diagram containing everything below `low`, and the listed members of
  // [low, high), nothing from high on.
  static MayaDiagram from_window(long low, long high, const std::function<bool(long)>& member);
  // Standard diagram with the given positive members.
  static MayaDiagram standard(std::vector<long> positives);

  bool contains(long m) const;
  const std::vector<long>& negative_holes() const { return holes_; }
  const std::vector<long>& nonnegative_members() const { return members_; }
  // Every m < window_low() is a member; no m >= window_high() is.
  long window_low() const { return holes_.empty() ? 0 : holes_.front(); }
  long window_high() const { return members_.empty() ? 0 : members_.back() + 1; }
  long index() const { return static_cast<long>(members_.size()) - static_cast<long>(holes_.size()); }
  bool is_standard() const { return holes_.empty() && (members_.empty() || members_.front() > 0); }

  friend bool operator==(const MayaDiagram&, const MayaDiagram&) = default;
  friend auto operator<=>(const MayaDiagram&, const MayaDiagram&) = default;

 private:
  std::vector<long> holes_;
  std::vector<long> members_;
};

// (s_1 > ... > s_r | t_1 > ... > t_q), all entries >= 0.
struct FrobeniusSymbol {
  std::vector<long> s;
  std::vector<long> t;
  friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

FrobeniusSymbol frobenius(const MayaDiagram& m);
MayaDiagram from_frobenius(const FrobeniusSymbol& f);

MayaDiagram translate(const MayaDiagram& m, long k);
MayaDiagram flip(const MayaDiagram& m, long pos);
MayaDiagram multi_flip(const MayaDiagram& m, const std::vector<long>& positions);

// (M+1) xor M, ascending; odd cardinality 2g+1.
std::vector<long> block_coordinates(const MayaDiagram& m);
// (-inf, b0) u [b1, b2) u ...; repeated entries cancel in pairs.
MayaDiagram xi(std::vector<long> beta);
long genus(const MayaDiagram& m);

// Theta_k(M^0..M^{k-1}) = union of k M^i + i, and its inverse.
MayaDiagram interlace(const std::vector<MayaDiagram>& parts);
std::vector<MayaDiagram> modular_decompose(const MayaDiagram& m, long k);

// (M+k) xor M, ascending.
std::vector<long> flip_set_k(const MayaDiagram& m, long k);
// Signature (2g_0+1, ..., 2g_{k-1}+1) of the k-modular decomposition.
std::vector<long> cyclic_signature(const MayaDiagram& m, long k);
long cyclicity(const MayaDiagram& m, long k);

struct StandardizedDiagram {
  MayaDiagram diagram;  // = m + shift
  long shift = 0;
};
StandardizedDiagram to_standard(const MayaDiagram& m);

// Filled/empty boxes over [low, high) with '|' before position 0.
std::string render(const MayaDiagram& m, long low, long high);
std::string render(const MayaDiagram& m);
// "Wr(H1,H2,H4)" for diagrams without negative holes, "pWr(s=[..];t=[..])" otherwise.
std::string wronskian_label(const MayaDiagram& m);

}  // namespace ratsol
