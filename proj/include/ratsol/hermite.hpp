#pragma once

#include <memory>
#include <vector>

#include "ratsol/maya.hpp"
#include "ratsol/ratfunc.hpp"

namespace ratsol {

// H_n with leading coefficient 2^n (memoized, thread-safe).
QPoly hermite(long n);
// theta_n(z) = i^{-n} H_n(iz).
QPoly conj_hermite(long n);

struct PseudoWronskian {
  MayaDiagram diagram;
  QPoly poly;
  Rational rescale_constant;  // c_M, with rescaled = c_M * poly
};

// c_M = (-1)^{rq} / (prod_{i<j} (2s_j - 2s_i) prod_{i<j} (2t_i - 2t_j)).
Rational rescale_constant(const MayaDiagram& m);
// deg H_M; equal to sum t - q(q-1)/2 for the standard translate.
long pseudo_wronskian_degree(const MayaDiagram& m);

// Determinant of the mixed theta / Hermite-derivative matrix for m itself.
QPoly pseudo_wronskian_direct(const MayaDiagram& m);
// H_M obtained from the cached standard-form Wronskian and the c_M ratio.
PseudoWronskian pseudo_wronskian(const MayaDiagram& m);
QPoly rescaled(const MayaDiagram& m);

// Wr(H_{t_1}, ..., H_{t_q}) in the given order.
QPoly hermite_wronskian(const std::vector<long>& indices);

struct WronskianData {
  QPoly poly;               // H of the standard diagram
  QRatFn log_derivative;    // poly'/poly
};
// Shared cache keyed by the standard translate; log derivatives are
// translation invariant.
std::shared_ptr<const WronskianData> standard_wronskian(const MayaDiagram& m);
const QRatFn& wronskian_log_derivative(const MayaDiagram& m);
void clear_wronskian_cache();
std::size_t wronskian_cache_size();

// Wr(H_m, ..., H_{m+n-1}), degree mn.
QPoly generalized_hermite(long m, long n);
// Wr(H_1, H_4, ..., H_{3m-2}, H_2, H_5, ..., H_{3n-1}).
QPoly generalized_okamoto(long m, long n);

}  // namespace ratsol
