#include "mct/roots.hpp"

#include "mct/error.hpp"

namespace mct {

IntVector Root::vector(int dim) const {
  if (!(1 <= p && p < q && q <= dim + 1)) fail(ErrorKind::InvalidInput, "root interval out of range");
  IntVector v(static_cast<std::size_t>(dim), 0);
  for (int i = p; i < q; ++i) v[static_cast<std::size_t>(i - 1)] = sign;
  return v;
}

std::optional<Root> decode_root(const IntVector& v) {
  int first = -1, last = -1;
  Int value = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 && v[i] != -1) return std::nullopt;
    if (first < 0) {
      first = static_cast<int>(i);
      value = v[i];
    } else if (v[i] != value || last != static_cast<int>(i) - 1) {
      return std::nullopt;
    }
    last = static_cast<int>(i);
  }
  if (first < 0) return std::nullopt;
  return Root{first + 1, last + 2, static_cast<int>(value)};
}

IntVector gamma_vector(int p, int n) {
  IntVector g(static_cast<std::size_t>(n - 1), 0);
  for (int i = p; i <= n - 1; ++i) g[static_cast<std::size_t>(i - 1)] = 1;
  return g;
}

}  // namespace mct
