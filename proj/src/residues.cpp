#include <cmath>
#include <set>
#include <sstream>

#include "ratsol/chains.hpp"
#include "ratsol/numerics.hpp"

namespace ratsol {

namespace {

std::string show(const BigComplex& z) {
  std::ostringstream out;
  out.precision(12);
  out << z.re.to_double() << (z.im.to_double() < 0 ? "" : "+") << z.im.to_double() << "i";
  return out.str();
}

}  // namespace

ResidueReport residue_properties(const DressingChainSolution& s, double tol, double even_power_tol,
                                 int precision_bits) {
  ResidueReport out;
  const long n = (static_cast<long>(s.w.size()) - 1) / 2;

  QPoly poles = QPoly::constant(1);
  for (const auto& w : s.w) {
    const QPoly d = squarefree_part(w.den());
    poles = exact_quotient(poles * d, gcd(poles, d));
  }
  if (poles.degree() < 1) return out;

  RootSet roots;
  try {
    roots = complex_roots(poles, precision_bits);
  } catch (const NonConvergence& e) {
    out.report.fail(-1, e.what());
    return out;
  }
  out.poles = roots.roots.size();

  for (const auto& zeta : roots.roots) {
    std::set<long> residues;
    bool all_integral = true;
    for (std::size_t i = 0; i < s.w.size(); ++i) {
      const long eq = static_cast<long>(i);
      if (!is_numeric_root(s.w[i].den(), zeta)) {
        residues.insert(0);
        continue;
      }
      BigComplex r(precision_bits);
      try {
        r = numeric_residue(s.w[i], zeta);
      } catch (const NonSimplePole& e) {
        out.report.fail(eq, std::string(e.what()) + " at " + show(zeta));
        all_integral = false;
        continue;
      }
      const double re = r.re.to_double(), im = r.im.to_double();
      const long m = std::lround(re);
      if (std::hypot(re - static_cast<double>(m), im) > tol) {
        out.report.fail(eq, "residue " + show(r) + " at " + show(zeta) + " is not an integer");
        all_integral = false;
        continue;
      }
      if (std::labs(m) > n) {
        out.report.fail(eq, "residue " + std::to_string(m) + " at " + show(zeta) + " exceeds n");
        all_integral = false;
      }
      residues.insert(m);
      out.max_abs_residue = std::max(out.max_abs_residue, std::labs(m));
      for (long j = 1; j <= std::labs(m); ++j) {
        const BigComplex rp = residue_of_power(s.w[i], zeta, 2 * j);
        if (rp.abs().to_double() > even_power_tol)
          out.report.fail(eq, "residue of w^" + std::to_string(2 * j) + " at " + show(zeta) + " is " + show(rp));
      }
    }
    if (!all_integral) continue;
    const long m = *residues.rbegin();
    std::set<long> expected;
    for (long v = -m; v <= m; ++v) expected.insert(v);
    if (residues != expected) out.report.fail(-1, "residue set at " + show(zeta) + " is not a symmetric integer range");
  }
  return out;
}

}  // namespace ratsol
