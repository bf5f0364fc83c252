#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hermite2 {

/// Element of GF(2^m): bit k of `bits` is the coefficient of x^k in the
/// polynomial-basis representative. Valid values lie in [0, 2^m).
struct Fe {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
};

namespace gf2 {

// Degree of a GF(2)[x] polynomial given as a bit mask; -1 for zero.
constexpr int degree(std::uint32_t p) { return std::bit_width(p) - 1; }

// Remainder of a modulo b in GF(2)[x].
constexpr std::uint32_t mod(std::uint32_t a, std::uint32_t b) {
  if (b == 0) return a;
  const int db = degree(b);
  while (a != 0 && degree(a) >= db) a ^= b << (degree(a) - db);
  return a;
}

// Trial division by every polynomial of degree 1..deg(p)/2.
constexpr bool is_irreducible(std::uint32_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  for (int k = 1; 2 * k <= d; ++k)
    for (std::uint32_t f = 1u << k; f < (2u << k); ++f)
      if (mod(p, f) == 0) return false;
  return true;
}

// Numerically smallest irreducible polynomial of the given degree.
constexpr std::uint32_t smallest_irreducible(int m) {
  for (std::uint32_t p = (1u << m) + 1; p < (2u << m); p += 2)
    if (is_irreducible(p)) return p;
  return 0;  // unreachable: irreducibles exist for every degree
}

}  // namespace gf2

/// GF(2^m) for 1 <= m <= 16, with a fixed reduction modulus per degree so
/// that element values are stable across builds. Elements are enumerated
/// as w_i = the element with bit pattern i; in particular w_0 = 0, w_1 = 1.
class Field {
 public:
  explicit Field(int m) : m_(m) {
    if (m < 1 || m > 16)
      throw std::invalid_argument("Field: extension degree must be in [1, 16], got " +
                                  std::to_string(m));
    modulus_ = modulus_for(m);
    q_ = 1u << m;
    if (!gf2::is_irreducible(modulus_))
      throw std::logic_error("Field: reduction modulus is reducible");
  }

  int degree() const { return m_; }
  std::uint32_t order() const { return q_; }
  std::uint32_t modulus() const { return modulus_; }

  /// w_i, the i-th element of the canonical enumeration.
  Fe element(std::uint32_t i) const {
    if (i >= q_)
      throw std::out_of_range("Field::element: index " + std::to_string(i) +
                              " not below field order " + std::to_string(q_));
    return Fe{i};
  }

  Fe add(Fe a, Fe b) const { return Fe{a.bits ^ b.bits}; }

  /// Shift-and-xor product reduced by the field modulus. Runs a fixed
  /// m-iteration loop regardless of operand values.
  Fe mul(Fe a, Fe b) const {
    std::uint32_t acc = 0;
    std::uint32_t aa = a.bits;
    for (int k = 0; k < m_; ++k) {
      acc ^= aa & (0u - ((b.bits >> k) & 1u));
      aa <<= 1;
      aa ^= modulus_ & (0u - ((aa >> m_) & 1u));
    }
    return Fe{acc};
  }

  Fe pow(Fe a, std::uint64_t e) const {
    Fe r{1};
    while (e != 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Inverse by exponentiation to q-2. Zero has no inverse.
  Fe inv(Fe a) const {
    if (a.bits == 0) throw std::domain_error("Field::inv: zero is not invertible");
    return pow(a, q_ - 2u);
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  static std::uint32_t modulus_for(int m) {
    switch (m) {
      case 1: return 0b10;      // x
      case 2: return 0b111;     // x^2 + x + 1
      case 3: return 0b1011;    // x^3 + x + 1
      case 4: return 0b10011;   // x^4 + x + 1
      case 8: return 0x11B;     // x^8 + x^4 + x^3 + x + 1
      default: return gf2::smallest_irreducible(m);
    }
  }

  int m_;
  std::uint32_t modulus_;
  std::uint32_t q_;
};

inline Field make_field(int m) { return Field(m); }

}  // namespace hermite2
