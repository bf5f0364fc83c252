#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermite2/gf2m.hpp"

namespace hermite2 {

/// Dense polynomial over GF(2^m); coeffs[i] is the coefficient of x^i.
/// The stored length is meaningful: it encodes the ambient space of
/// polynomials of degree below coeffs.size(), so trailing zeros are kept
/// and every routine works over the stored length without inspecting
/// values. This keeps operation counts a function of sizes alone.
struct Poly {
  Field field;
  std::vector<Fe> coeffs;

  Poly(const Field& f, std::size_t len) : field(f), coeffs(len) {}
  Poly(const Field& f, std::vector<Fe> c) : field(f), coeffs(std::move(c)) {}

  std::size_t length() const { return coeffs.size(); }

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// Largest i with a nonzero coefficient, or -1 for the zero polynomial.
inline int degree(const Poly& p) {
  for (std::size_t i = p.coeffs.size(); i-- > 0;)
    if (p.coeffs[i].bits != 0) return static_cast<int>(i);
  return -1;
}

inline void require_same_field(const Poly& a, const Poly& b) {
  if (!(a.field == b.field))
    throw std::invalid_argument("polynomial operands belong to different fields");
}

/// Value equality: same field and same coefficients up to trailing zeros.
inline bool same_polynomial(const Poly& a, const Poly& b) {
  if (!(a.field == b.field)) return false;
  const std::size_t n = std::min(a.length(), b.length());
  for (std::size_t i = 0; i < n; ++i)
    if (!(a.coeffs[i] == b.coeffs[i])) return false;
  for (std::size_t i = n; i < a.length(); ++i)
    if (a.coeffs[i].bits != 0) return false;
  for (std::size_t i = n; i < b.length(); ++i)
    if (b.coeffs[i].bits != 0) return false;
  return true;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  Poly out(a.field, std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < a.length(); ++i) out.coeffs[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.length(); ++i)
    out.coeffs[i] = a.field.add(out.coeffs[i], b.coeffs[i]);
  return out;
}

/// Schoolbook convolution; the result length is lenA + lenB - 1.
inline Poly poly_mul(const Poly& a, const Poly& b) {
  require_same_field(a, b);
  if (a.coeffs.empty() || b.coeffs.empty()) return Poly(a.field, 0);
  Poly out(a.field, a.length() + b.length() - 1);
  for (std::size_t i = 0; i < a.length(); ++i)
    for (std::size_t j = 0; j < b.length(); ++j)
      out.coeffs[i + j] = a.field.add(out.coeffs[i + j], a.field.mul(a.coeffs[i], b.coeffs[j]));
  return out;
}

/// Long division: returns (Q, R) with P = Q*D + R and deg R < deg D.
inline std::pair<Poly, Poly> poly_divrem(const Poly& p, const Poly& d) {
  require_same_field(p, d);
  const int dd = degree(d);
  if (dd < 0) throw std::domain_error("poly_divrem: division by the zero polynomial");
  const Field& f = p.field;
  const std::size_t lp = p.length();
  Poly q(f, lp > std::size_t(dd) ? lp - std::size_t(dd) : 1);
  std::vector<Fe> r = p.coeffs;
  const Fe lead_inv = f.inv(d.coeffs[std::size_t(dd)]);
  for (std::size_t k = lp; k-- > std::size_t(dd);) {
    const Fe t = f.mul(r[k], lead_inv);
    q.coeffs[k - std::size_t(dd)] = t;
    for (std::size_t j = 0; j <= std::size_t(dd); ++j)
      r[k - std::size_t(dd) + j] = f.add(r[k - std::size_t(dd) + j], f.mul(t, d.coeffs[j]));
  }
  Poly rem(f, std::size_t(std::max(dd, 1)));
  for (std::size_t i = 0; i < rem.length() && i < r.size(); ++i) rem.coeffs[i] = r[i];
  return {std::move(q), std::move(rem)};
}

/// Horner evaluation over the stored length: exactly len-1 additions and
/// len-1 multiplications.
inline Fe poly_eval(const Poly& p, Fe x) {
  if (p.coeffs.empty()) return Fe{0};
  Fe acc = p.coeffs.back();
  for (std::size_t k = p.length() - 1; k-- > 0;)
    acc = p.field.add(p.field.mul(acc, x), p.coeffs[k]);
  return acc;
}

/// Coefficients of p(x + w), same stored length as p. Horner-style
/// substitution: repeatedly multiply the accumulated polynomial by (x + w)
/// and add the next coefficient.
inline Poly taylor_shift(const Poly& p, Fe w) {
  const Field& f = p.field;
  const std::size_t len = p.length();
  Poly out(f, len);
  for (std::size_t k = len; k-- > 0;) {
    const std::size_t cur = len - 1 - k;  // expansion length before this step
    for (std::size_t t = cur; t >= 1; --t)
      out.coeffs[t] = f.add(out.coeffs[t - 1], f.mul(w, out.coeffs[t]));
    out.coeffs[0] = f.add(f.mul(w, out.coeffs[0]), p.coeffs[k]);
  }
  return out;
}

}  // namespace hermite2
