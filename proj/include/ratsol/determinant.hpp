#pragma once

#include <functional>
#include <vector>

#include "ratsol/polynomial.hpp"

namespace ratsol {

template <class S>
using PolyMatrix = std::vector<std::vector<Polynomial<S>>>;
using QPolyMatrix = PolyMatrix<Rational>;
using IntMatrix = std::vector<std::vector<Integer>>;

// Fraction-free Gaussian elimination with row pivoting.
Integer integer_determinant(IntMatrix m);

// Clears denominators row by row, evaluates at integer points, runs Bareiss
// on each integer matrix and interpolates. Throws on a non-square matrix.
QPoly poly_determinant(const QPolyMatrix& m);

// Newton interpolation through (x_i, y_i), distinct nodes.
QPoly interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys);

// Rebuilds a polynomial of known degree and parity (p(-z) = (-1)^degree p(z))
// from integer samples p(1), p(2), ... (and p(0) for even degree).
QPoly interpolate_with_parity(long degree, const std::function<Integer(long)>& sample);

// Laplace expansion along the first row; small matrices and test oracles.
template <class S>
Polynomial<S> determinant_by_minors(const PolyMatrix<S>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Polynomial<S>::constant(S(Rational(1)));
  if (n == 1) return m[0][0];
  Polynomial<S> acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix<S> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial<S>> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(std::move(row));
    }
    Polynomial<S> term = m[0][j] * determinant_by_minors(minor);
    if (j % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc;
}

// Wronskian of f_1..f_n: row i holds the i-th derivatives. Throws on empty input.
QPoly wronskian(const std::vector<QPoly>& fs);
QPolyMatrix wronskian_matrix(const std::vector<QPoly>& fs);

}  // namespace ratsol
