#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermite2/transform.hpp"

namespace hermite2 {

struct BaseCallRecord {
  BaseKind kind = BaseKind::eval;
  std::size_t c = 0;
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;

  friend bool operator==(const BaseCallRecord&, const BaseCallRecord&) = default;
};

/// Field-operation tallies for one transform run, plus a log of base-case
/// calls in execution order. The reduction layers between base calls
/// consist of additions only, so the per-call records account for every
/// multiplication and inversion of the run.
struct OpCounts {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;
  std::vector<BaseCallRecord> base_calls;

  std::uint64_t base_adds() const {
    std::uint64_t s = 0;
    for (const auto& b : base_calls) s += b.adds;
    return s;
  }
  std::uint64_t base_muls() const {
    std::uint64_t s = 0;
    for (const auto& b : base_calls) s += b.muls;
    return s;
  }
  std::uint64_t base_invs() const {
    std::uint64_t s = 0;
    for (const auto& b : base_calls) s += b.invs;
    return s;
  }

  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

/// Counting context: forwards every operation to the field and tallies it.
/// One context per transform invocation; not meant to be shared.
class CountingContext {
 public:
  explicit CountingContext(const Field& f) : field_(f) {}

  const Field& field() const { return field_; }
  Fe add(Fe a, Fe b) {
    ++counts_.adds;
    return field_.add(a, b);
  }
  Fe mul(Fe a, Fe b) {
    ++counts_.muls;
    return field_.mul(a, b);
  }
  Fe inv(Fe a) {
    ++counts_.invs;
    return field_.inv(a);
  }

  void begin_base(BaseKind kind, std::size_t c) {
    if (open_) throw std::logic_error("CountingContext: nested base call");
    open_ = true;
    snap_ = counts_;
    counts_.base_calls.push_back(BaseCallRecord{kind, c, 0, 0, 0});
  }
  void end_base() {
    if (!open_) throw std::logic_error("CountingContext: end_base without begin_base");
    open_ = false;
    BaseCallRecord& rec = counts_.base_calls.back();
    rec.adds = counts_.adds - snap_.adds;
    rec.muls = counts_.muls - snap_.muls;
    rec.invs = counts_.invs - snap_.invs;
  }

  const OpCounts& counts() const { return counts_; }

 private:
  Field field_;
  OpCounts counts_;
  OpCounts snap_;
  bool open_ = false;
};

/// Runs the fast evaluation under a fresh counting context.
inline std::pair<std::vector<Fe>, OpCounts> counted_run(const Poly& p, std::size_t l) {
  CountingContext ctx(p.field);
  auto out = hermite_evaluate_len(p, l, ctx);
  return {std::move(out), ctx.counts()};
}

/// Runs the fast interpolation under a fresh counting context.
inline std::pair<Poly, OpCounts> counted_run(const Field& f, std::span<const Fe> h) {
  CountingContext ctx(f);
  auto out = hermite_interpolate_len(h, ctx);
  return {std::move(out), ctx.counts()};
}

/// Exact per-base-call aggregation law for multiplications (and,
/// identically, inversions): total = base(q) * (ceil(c/q) - 1)
/// + base(c mod* q). `base` maps a base-call truncation in {1,...,q} to
/// its operation count.
template <class BaseCount>
std::uint64_t predicted_mul_count(BaseCount&& base, std::size_t q, int n, std::size_t c) {
  if (n < 0 || c < 1 || c > (std::size_t(1) << n) * q)
    throw std::domain_error("predicted_mul_count: c out of range");
  const std::size_t blocks = (c + q - 1) / q;
  std::uint64_t total = base(modstar(c, q));
  if (blocks > 1) total += std::uint64_t(blocks - 1) * base(q);
  return total;
}

/// Upper bound on the additions performed by a transform of the given
/// kind, from the measured base-call counts a0q = adds of a full (c = q)
/// base call and a0rem = adds of the one truncated call. Evaluated in
/// exact quarter-integer arithmetic and rounded up.
inline std::uint64_t predicted_add_bound(std::uint64_t a0q, std::uint64_t a0rem, std::size_t q,
                                         int n, std::size_t c, BaseKind kind) {
  if (n < 0 || c < 1 || c > (std::size_t(1) << n) * q)
    throw std::domain_error("predicted_add_bound: c out of range");
  const std::size_t blocks = (c + q - 1) / q;
  const std::int64_t k1 = std::int64_t(blocks) - 1;
  const std::int64_t lg = std::bit_width(blocks - 1);
  std::int64_t quarters = 4 * std::int64_t(a0rem) + 4 * k1 * std::int64_t(a0q);
  if (kind == BaseKind::eval) {
    quarters += (3 * lg - 1) * k1 * std::int64_t(q);
    quarters += 4 * ((std::int64_t(1) << n) - 1) * std::int64_t(q);
  } else {
    quarters += (7 * lg - 4 * n - 3) * k1 * std::int64_t(q);
    quarters += 4 * ((std::int64_t(1) << n) - 1) * std::int64_t(2 * q + 1);
  }
  return std::uint64_t((quarters + 3) / 4);
}

template <class BasicJsonType>
void to_json(BasicJsonType& j, const BaseCallRecord& r) {
  j = BasicJsonType{
      {"kind", kind_name(r.kind)}, {"c", r.c}, {"adds", r.adds}, {"muls", r.muls}, {"invs", r.invs}};
}

template <class BasicJsonType>
void to_json(BasicJsonType& j, const OpCounts& c) {
  j = BasicJsonType{
      {"adds", c.adds}, {"muls", c.muls}, {"invs", c.invs}, {"base_calls", c.base_calls}};
}

}  // namespace hermite2
