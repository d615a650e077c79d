#pragma once

#include <compare>
#include <optional>

#include "mct/matrix.hpp"

namespace mct {

// sign * (e_p + ... + e_{q-1}) in Z^{n-1}; with sign +1 this is the dimension
// vector of the interval module M_pq of the type A quiver.
struct Root {
  int p = 1;
  int q = 2;
  int sign = 1;

  IntVector vector(int dim) const;
  Root negated() const { return {p, q, -sign}; }
  Root positive() const { return {p, q, 1}; }

  auto operator<=>(const Root&) const = default;
};

// Decodes +-(consecutive block of ones); nullopt for anything else.
std::optional<Root> decode_root(const IntVector& v);

// gamma_p = e_p + ... + e_{n-1}, with gamma_n = 0.
IntVector gamma_vector(int p, int n);

}  // namespace mct
