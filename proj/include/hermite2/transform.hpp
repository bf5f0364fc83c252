#pragma once

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "hermite2/gf2m.hpp"
#include "hermite2/poly.hpp"

namespace hermite2 {

enum class BaseKind { eval, interp };

inline const char* kind_name(BaseKind k) { return k == BaseKind::eval ? "eval" : "interp"; }

/// Arithmetic context threaded through the transforms. A model supplies
/// the field operations plus bracketing hooks around base-case calls; the
/// counting context uses the hooks to attribute per-call operation totals,
/// the plain context ignores them.
template <class C>
concept ArithContext = requires(C& ctx, Fe a, Fe b, BaseKind k, std::size_t c) {
  { ctx.field() } -> std::convertible_to<const Field&>;
  { ctx.add(a, b) } -> std::same_as<Fe>;
  { ctx.mul(a, b) } -> std::same_as<Fe>;
  { ctx.inv(a) } -> std::same_as<Fe>;
  ctx.begin_base(k, c);
  ctx.end_base();
};

/// Pass-through context: field arithmetic, no bookkeeping.
class PlainContext {
 public:
  explicit PlainContext(const Field& f) : field_(f) {}
  const Field& field() const { return field_; }
  Fe add(Fe a, Fe b) const { return field_.add(a, b); }
  Fe mul(Fe a, Fe b) const { return field_.mul(a, b); }
  Fe inv(Fe a) const { return field_.inv(a); }
  void begin_base(BaseKind, std::size_t) {}
  void end_base() {}

 private:
  Field field_;
};

/// Floor quotient.
inline std::size_t bdiv(std::size_t i, std::size_t j) {
  if (j == 0) throw std::domain_error("bdiv: zero divisor");
  return i / j;
}

/// Remainder in [0, j).
inline std::size_t bmod(std::size_t i, std::size_t j) {
  if (j == 0) throw std::domain_error("bmod: zero divisor");
  return i % j;
}

/// Remainder in {1, ..., j}: a full block reports j rather than 0.
inline std::size_t modstar(std::size_t i, std::size_t j) {
  if (j == 0) throw std::domain_error("modstar: zero divisor");
  const std::size_t r = i % j;
  return r == 0 ? j : r;
}

/// Recursion depth n for a length-l problem over a field of order q: the
/// smallest n such that l fits in 2^n blocks of q.
inline int depth_for_length(std::size_t l, std::size_t q) {
  if (l < 1) throw std::domain_error("depth_for_length: length must be >= 1");
  const std::size_t blocks = (l + q - 1) / q;
  return static_cast<int>(std::bit_width(blocks - 1));
}

/// In-place working vector for the Hermite transforms: exactly 2^n * q
/// entries over the given field. Index i of a fully evaluated buffer means
/// derivative order i div q at point w_{i mod q}.
class HermiteBuffer {
 public:
  HermiteBuffer(const Field& f, int depth) : field_(f), depth_(depth) {
    if (depth < 0 || depth > 24)
      throw std::invalid_argument("HermiteBuffer: depth out of range");
    a_.resize((std::size_t(1) << depth) * f.order());
  }

  const Field& field() const { return field_; }
  int depth() const { return depth_; }
  std::size_t size() const { return a_.size(); }
  Fe& operator[](std::size_t i) { return a_[i]; }
  Fe operator[](std::size_t i) const { return a_[i]; }
  std::span<Fe> data() { return a_; }
  std::span<const Fe> data() const { return a_; }

 private:
  Field field_;
  int depth_;
  std::vector<Fe> a_;
};

/// Multipoint evaluation over the field, naive realization: Horner at each
/// of the first c points. Writes values into a[0..c); entries at c and
/// above are left unchanged. Performs exactly c*(q-1) additions and
/// c*(q-1) multiplications regardless of the values involved.
template <ArithContext C>
void evaluate_base(std::span<Fe> a, std::size_t c, C& ctx) {
  const Field& f = ctx.field();
  const std::size_t q = f.order();
  if (a.size() != q) throw std::invalid_argument("evaluate_base: slice length must equal q");
  if (c < 1 || c > q) throw std::domain_error("evaluate_base: c out of range");
  ctx.begin_base(BaseKind::eval, c);
  std::vector<Fe> vals(c);
  for (std::size_t i = 0; i < c; ++i) {
    const Fe w = f.element(std::uint32_t(i));
    Fe acc = a[q - 1];
    for (std::size_t k = q - 1; k-- > 0;) acc = ctx.add(ctx.mul(acc, w), a[k]);
    vals[i] = acc;
  }
  std::copy(vals.begin(), vals.end(), a.begin());
  ctx.end_base();
}

/// Inverse of evaluate_base on a mixed slice: a[0..c) holds values of F at
/// the first c points and a[c..q) holds the coefficients f_c..f_{q-1}; on
/// return the whole slice holds coefficients. The high part is evaluated
/// as a full length-q polynomial (zero entries below c), its values are
/// subtracted off, and the low part is recovered by Newton interpolation
/// through the residual values. Every path performs an operation count
/// that depends on (q, c) only.
template <ArithContext C>
void interpolate_base(std::span<Fe> a, std::size_t c, C& ctx) {
  const Field& f = ctx.field();
  const std::size_t q = f.order();
  if (a.size() != q) throw std::invalid_argument("interpolate_base: slice length must equal q");
  if (c < 1 || c > q) throw std::domain_error("interpolate_base: c out of range");
  ctx.begin_base(BaseKind::interp, c);

  std::vector<Fe> v(c);
  for (std::size_t i = 0; i < c; ++i) {
    const Fe w = f.element(std::uint32_t(i));
    Fe acc = (q - 1 >= c) ? a[q - 1] : Fe{0};
    for (std::size_t k = q - 1; k-- > 0;) {
      const Fe high = (k >= c) ? a[k] : Fe{0};
      acc = ctx.add(ctx.mul(acc, w), high);
    }
    v[i] = ctx.add(a[i], acc);
  }

  // Divided differences over w_0..w_{c-1}; the points are distinct, so
  // every denominator is invertible.
  std::vector<Fe> d = v;
  for (std::size_t j = 1; j < c; ++j)
    for (std::size_t i = c; i-- > j;) {
      const Fe den = ctx.add(f.element(std::uint32_t(i)), f.element(std::uint32_t(i - j)));
      d[i] = ctx.mul(ctx.add(d[i], d[i - 1]), ctx.inv(den));
    }

  // Expand the Newton form into monomial coefficients in a[0..c).
  for (std::size_t t = 0; t < c; ++t) a[t] = Fe{0};
  a[0] = d[c - 1];
  for (std::size_t k = c - 1; k-- > 0;) {
    const Fe w = f.element(std::uint32_t(k));
    const std::size_t cur = c - 1 - k;  // expansion length before this step
    for (std::size_t t = cur; t >= 1; --t) a[t] = ctx.add(a[t - 1], ctx.mul(w, a[t]));
    a[0] = ctx.add(ctx.mul(w, a[0]), d[k]);
  }
  ctx.end_base();
}

namespace detail {

// All span-level routines take a slice of length 2^n * q with n >= 1.
// Throughout, half = 2^{n-1} q and s = 2^{n-1}.

template <ArithContext C>
void prepare_left_span(std::span<Fe> a, std::size_t c, C& ctx) {
  const std::size_t q = ctx.field().order();
  const std::size_t half = a.size() / 2;
  const std::size_t s = half / q;
  for (std::size_t i = std::max(c, s); i < half; ++i)
    a[i] = ctx.add(a[i], a[s * (q - 1) + i]);
  for (std::size_t i = std::max(c, s); i < 2 * s; ++i)
    a[i] = ctx.add(a[i], a[2 * s * (q - 1) + i]);
}

template <ArithContext C>
void prepare_right_span(std::span<Fe> a, std::size_t c, C& ctx) {
  const std::size_t q = ctx.field().order();
  const std::size_t half = a.size() / 2;
  const std::size_t s = half / q;
  for (std::size_t i = s * (q + 1); i-- > c;)
    a[i] = ctx.add(a[i], a[s * (q - 1) + i]);
  const std::size_t t = bdiv(c, 2 * s);
  const std::size_t r = std::min(bmod(c, 2 * s), s);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = t + 1; i < q; ++i)
      a[2 * s * i + j] = ctx.add(a[2 * s * i + j], a[2 * s * i + j - (q - 1) * s]);
  for (std::size_t j = r; j < s; ++j)
    for (std::size_t i = t; i < q; ++i)
      a[2 * s * i + j] = ctx.add(a[2 * s * i + j], a[2 * s * i + j - (q - 1) * s]);
}

template <ArithContext C>
void hermite_evaluate_span(std::span<Fe> a, std::size_t c, C& ctx) {
  const std::size_t q = ctx.field().order();
  if (a.size() == q) {
    evaluate_base(a, c, ctx);
    return;
  }
  const std::size_t half = a.size() / 2;
  const std::size_t s = half / q;
  if (c > half) {
    // Split into low/high parts. The loop must run downward: entries in
    // [half, half + s) are rewritten first and the iterations for i < 2s
    // then read the rewritten values.
    for (std::size_t i = s * (q + 1); i-- > s;)
      a[i] = ctx.add(a[i], a[s * (q - 1) + i]);
    // Fold the order-2^{n-1} derivative of the low part into the high part.
    for (std::size_t i = q / 2; i < q; ++i)
      for (std::size_t j = 0; j < s; ++j)
        a[2 * s * i + j] = ctx.add(a[2 * s * i + j], a[2 * s * i + j - (q - 1) * s]);
    hermite_evaluate_span(a.first(half), half, ctx);
    hermite_evaluate_span(a.subspan(half), c - half, ctx);
  } else {
    // Only the low part contributes to the first c outputs.
    prepare_left_span(a, 0, ctx);
    hermite_evaluate_span(a.first(half), c, ctx);
  }
}

template <ArithContext C>
void hermite_interpolate_span(std::span<Fe> a, std::size_t c, C& ctx) {
  const std::size_t q = ctx.field().order();
  if (a.size() == q) {
    interpolate_base(a, c, ctx);
    return;
  }
  const std::size_t half = a.size() / 2;
  const std::size_t s = half / q;
  if (c > half) {
    hermite_interpolate_span(a.first(half), half, ctx);
    prepare_right_span(a, c, ctx);
    hermite_interpolate_span(a.subspan(half), c - half, ctx);
    for (std::size_t i = q / 2; i < q; ++i)
      for (std::size_t j = 0; j < s; ++j)
        a[2 * s * i + j] = ctx.add(a[2 * s * i + j], a[2 * s * i + j - (q - 1) * s]);
    // Inverse of the evaluation split. The loop must run upward: entries
    // in [half, half + s) are read by the iterations for i < 2s before
    // the final iterations rewrite them.
    for (std::size_t i = s; i < s * (q + 1); ++i)
      a[i] = ctx.add(a[i], a[s * (q - 1) + i]);
  } else {
    prepare_left_span(a, c, ctx);
    hermite_interpolate_span(a.first(half), c, ctx);
    prepare_left_span(a, 0, ctx);
  }
}

inline void check_buffer(const HermiteBuffer& buf, const Field& ctx_field, const char* who) {
  if (!(ctx_field == buf.field()))
    throw std::invalid_argument(std::string(who) + ": context and buffer fields differ");
}

}  // namespace detail

/// Folds the high half into the low half so that low-half entries at
/// indices >= max(c, 2^{n-1}) hold coefficients of the low-part
/// polynomial. Involution for fixed c; requires depth >= 1.
template <ArithContext C>
void prepare_left(HermiteBuffer& buf, std::size_t c, C& ctx) {
  detail::check_buffer(buf, ctx.field(), "prepare_left");
  if (buf.depth() < 1) throw std::invalid_argument("prepare_left: buffer depth must be >= 1");
  if (c > buf.size()) throw std::domain_error("prepare_left: c out of range");
  detail::prepare_left_span(buf.data(), c, ctx);
}

/// Completes the high half of a partially interpolated buffer: applies the
/// evaluation-side split steps restricted to entries at indices >= c.
/// Requires depth >= 1.
template <ArithContext C>
void prepare_right(HermiteBuffer& buf, std::size_t c, C& ctx) {
  detail::check_buffer(buf, ctx.field(), "prepare_right");
  if (buf.depth() < 1) throw std::invalid_argument("prepare_right: buffer depth must be >= 1");
  if (c < 1 || c > buf.size()) throw std::domain_error("prepare_right: c out of range");
  detail::prepare_right_span(buf.data(), c, ctx);
}

/// In-place Hermite evaluation. On entry the buffer holds the coefficients
/// of F; on return entry i < c holds the derivative of order i div q of F
/// at point w_{i mod q}. Entries at indices >= c hold unspecified
/// intermediates.
template <ArithContext C>
void hermite_evaluate(HermiteBuffer& buf, std::size_t c, C& ctx) {
  detail::check_buffer(buf, ctx.field(), "hermite_evaluate");
  if (c < 1 || c > buf.size()) throw std::domain_error("hermite_evaluate: c out of range");
  detail::hermite_evaluate_span(buf.data(), c, ctx);
}

/// In-place Hermite interpolation. On entry, entry i < c holds the
/// derivative value of index i and entry i >= c holds the coefficient f_i;
/// on return the buffer holds all coefficients of F.
template <ArithContext C>
void hermite_interpolate(HermiteBuffer& buf, std::size_t c, C& ctx) {
  detail::check_buffer(buf, ctx.field(), "hermite_interpolate");
  if (c < 1 || c > buf.size()) throw std::domain_error("hermite_interpolate: c out of range");
  detail::hermite_interpolate_span(buf.data(), c, ctx);
}

/// Hermite evaluation of a length-l problem: pads the coefficients into a
/// fresh buffer of the right depth and returns the first l values.
template <ArithContext C>
std::vector<Fe> hermite_evaluate_len(const Poly& p, std::size_t l, C& ctx) {
  if (l < 1) throw std::domain_error("hermite_evaluate_len: length must be >= 1");
  if (p.length() > l)
    throw std::invalid_argument("hermite_evaluate_len: polynomial longer than the problem length");
  if (!(p.field == ctx.field()))
    throw std::invalid_argument("hermite_evaluate_len: context and polynomial fields differ");
  HermiteBuffer buf(ctx.field(), depth_for_length(l, ctx.field().order()));
  std::copy(p.coeffs.begin(), p.coeffs.end(), buf.data().begin());
  hermite_evaluate(buf, l, ctx);
  return std::vector<Fe>(buf.data().begin(), buf.data().begin() + std::ptrdiff_t(l));
}

/// Recovers the unique polynomial of degree < l from its l Hermite values.
/// The padding entries represent coefficients that are zero by
/// construction, so they must be zero again on exit; anything else means
/// the transform itself is broken.
template <ArithContext C>
Poly hermite_interpolate_len(std::span<const Fe> h, C& ctx) {
  const std::size_t l = h.size();
  if (l < 1) throw std::domain_error("hermite_interpolate_len: length must be >= 1");
  HermiteBuffer buf(ctx.field(), depth_for_length(l, ctx.field().order()));
  std::copy(h.begin(), h.end(), buf.data().begin());
  hermite_interpolate(buf, l, ctx);
  for (std::size_t i = l; i < buf.size(); ++i)
    if (buf[i].bits != 0)
      throw std::logic_error("hermite_interpolate_len: padding entries not restored to zero");
  return Poly(ctx.field(),
              std::vector<Fe>(buf.data().begin(), buf.data().begin() + std::ptrdiff_t(l)));
}

}  // namespace hermite2
