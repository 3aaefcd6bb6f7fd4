#pragma once

// Integer polynomial kernels used behind the rational polynomial API.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "ratsol/polynomial.hpp"

namespace ratsol::detail {

using ZPoly = std::vector<mpz_class>;  // lowest degree first, trimmed

void ztrim(ZPoly& a);
ZPoly zmul(const ZPoly& a, const ZPoly& b);
ZPoly zmul_schoolbook(const ZPoly& a, const ZPoly& b);
ZPoly zmul_kronecker(const ZPoly& a, const ZPoly& b);
ZPoly zadd(const ZPoly& a, const ZPoly& b);
ZPoly zsub(const ZPoly& a, const ZPoly& b);
ZPoly zderivative(const ZPoly& a);
mpz_class zcontent(const ZPoly& a);
// Divides out the content and makes the leading coefficient positive.
ZPoly zprimitive(const ZPoly& a);
mpz_class zeval(const ZPoly& a, const mpz_class& x);
// a / b if b divides a in Z[x], nullopt otherwise.
std::optional<ZPoly> zexact_div(const ZPoly& a, const ZPoly& b);
// Primitive gcd with positive leading coefficient.
ZPoly zgcd(const ZPoly& a, const ZPoly& b);
std::optional<ZPoly> zgcd_heuristic(const ZPoly& a, const ZPoly& b);
ZPoly zgcd_subresultant(const ZPoly& a, const ZPoly& b);
std::size_t zmax_bits(const ZPoly& a);
// a evaluated at 2^(slot * GMP_NUMB_BITS), i.e. coefficients packed `slot` limbs apart.
mpz_class zpack(const ZPoly& a, std::size_t slot);
ZPoly zscaled(const ZPoly& a, const mpz_class& c);

// p = z / den with z integral and den > 0 minimal.
struct ZCleared {
  ZPoly z;
  mpz_class den;
};
ZCleared zclear(const QPoly& p);

}  // namespace ratsol::detail
