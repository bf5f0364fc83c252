#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "hermite2/poly.hpp"

namespace hermite2 {

/// binom(k, i) mod 2 via the bitwise containment test: odd exactly when
/// every set bit of i is also set in k.
constexpr bool binom_odd(std::uint64_t k, std::uint64_t i) { return (k & i) == i; }

/// i-th Hasse derivative: x^k maps to binom(k, i) x^{k-i}. Output length
/// is max(len - i, 1).
inline Poly hasse_derivative(const Poly& p, std::size_t i) {
  const std::size_t len = p.length();
  Poly out(p.field, len > i ? len - i : 1);
  for (std::size_t k = i; k < len; ++k)
    if (binom_odd(k, i)) out.coeffs[k - i] = p.coeffs[k];
  return out;
}

/// Reference Hermite evaluation. Entry i of the result is the derivative
/// of order i div q at point w_{i mod q}, read off as coefficient i div q
/// of the Taylor expansion of p at that point. Quadratic per point; this
/// is a correctness oracle, not a fast path.
inline std::vector<Fe> hermite_eval_naive(const Poly& p, std::size_t l) {
  if (l < 1) throw std::domain_error("hermite_eval_naive: length must be >= 1");
  if (p.length() > l)
    throw std::invalid_argument("hermite_eval_naive: polynomial longer than the problem length");
  const Field& f = p.field;
  const std::size_t q = f.order();
  Poly padded(f, l);
  std::copy(p.coeffs.begin(), p.coeffs.end(), padded.coeffs.begin());

  // One Taylor expansion per distinct point, shared across all orders.
  std::vector<std::vector<Fe>> shifted(std::min<std::size_t>(q, l));
  std::vector<bool> have(shifted.size(), false);
  std::vector<Fe> h(l);
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t pt = i % q;
    if (!have[pt]) {
      shifted[pt] = taylor_shift(padded, f.element(std::uint32_t(pt))).coeffs;
      have[pt] = true;
    }
    h[i] = shifted[pt][i / q];
  }
  return h;
}

/// Reference Hermite interpolation: solves the l x l linear system that
/// maps coefficients to derivative values by Gaussian elimination. The
/// system is nonsingular for every length, so a missing pivot indicates a
/// broken matrix construction rather than bad input.
inline Poly hermite_interp_naive(const Field& f, std::span<const Fe> h) {
  const std::size_t l = h.size();
  if (l < 1) throw std::domain_error("hermite_interp_naive: length must be >= 1");
  const std::size_t q = f.order();

  // Row i: derivative order i div q at w_{i mod q} applied to x^k.
  std::vector<std::vector<Fe>> mat(l, std::vector<Fe>(l + 1));
  for (std::size_t i = 0; i < l; ++i) {
    const std::size_t ord = i / q;
    const Fe w = f.element(std::uint32_t(i % q));
    for (std::size_t k = ord; k < l; ++k)
      if (binom_odd(k, ord)) mat[i][k] = f.pow(w, k - ord);
    mat[i][l] = h[i];
  }

  for (std::size_t col = 0; col < l; ++col) {
    std::size_t piv = col;
    while (piv < l && mat[piv][col].bits == 0) ++piv;
    if (piv == l) throw std::logic_error("hermite_interp_naive: singular system");
    std::swap(mat[piv], mat[col]);
    const Fe col_inv = f.inv(mat[col][col]);
    for (std::size_t row = col + 1; row < l; ++row) {
      if (mat[row][col].bits == 0) continue;
      const Fe t = f.mul(mat[row][col], col_inv);
      for (std::size_t k = col; k <= l; ++k)
        mat[row][k] = f.add(mat[row][k], f.mul(t, mat[col][k]));
    }
  }

  Poly out(f, l);
  for (std::size_t i = l; i-- > 0;) {
    Fe acc = mat[i][l];
    for (std::size_t k = i + 1; k < l; ++k)
      acc = f.add(acc, f.mul(mat[i][k], out.coeffs[k]));
    out.coeffs[i] = f.mul(acc, f.inv(mat[i][i]));
  }
  return out;
}

}  // namespace hermite2
