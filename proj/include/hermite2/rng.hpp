#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hermite2/poly.hpp"

namespace hermite2 {

// q is a power of two, so masking gives exactly uniform elements.
inline Fe random_element(std::mt19937_64& gen, const Field& f) {
  return Fe{std::uint32_t(gen() & (f.order() - 1))};
}

inline std::vector<Fe> random_values(std::mt19937_64& gen, const Field& f, std::size_t len) {
  std::vector<Fe> v(len);
  for (auto& e : v) e = random_element(gen, f);
  return v;
}

inline Poly random_poly(std::mt19937_64& gen, const Field& f, std::size_t len) {
  return Poly(f, random_values(gen, f, len));
}

}  // namespace hermite2
