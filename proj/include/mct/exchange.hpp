#pragma once

#include "mct/matrix.hpp"
#include "mct/tree.hpp"

namespace mct {

// Euler matrix of Q_epsilon: 1 on the diagonal, -1 at (i, j) for each arrow
// i -> j. The arrow between vertices i and i+1 points left when
// epsilon_{i+1} = +1 and right when epsilon_{i+1} = -1; epsilon_1 and
// epsilon_n play no role.
IntMatrix euler_matrix(const SignSequence& epsilon);

// E - E^t: skew-symmetric with superdiagonal (epsilon_2, ..., epsilon_{n-1}).
IntMatrix x_matrix(const SignSequence& epsilon);

bool is_skew_symmetric(const IntMatrix& m);

// The 2m x m matrix [B; C] with a skew-symmetric principal part B.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  ExchangeMatrix(IntMatrix principal, IntMatrix bottom);
  // Splits a stacked 2m x m matrix.
  static ExchangeMatrix from_stacked(const IntMatrix& stacked);

  int rank() const noexcept { return static_cast<int>(principal_.cols()); }
  const IntMatrix& principal() const noexcept { return principal_; }
  const IntMatrix& bottom() const noexcept { return bottom_; }
  IntMatrix stacked() const;

  bool operator==(const ExchangeMatrix&) const = default;

 private:
  IntMatrix principal_;
  IntMatrix bottom_;
};

// [C^t X C; C] with C = c_matrix(tree). Empty for n = 1.
ExchangeMatrix exchange_matrix(const MixedCobinaryTree& tree);

// Fomin-Zelevinsky mutation in direction k (1-based):
//   b'_ij = -b_ij                      if i = k or j = k
//   b'_ij = b_ij + b_ik |b_kj|         if b_ik and b_kj have the same sign
//   b'_ij = b_ij                       otherwise
// over every row of the stacked matrix, with b_kj read from the principal part.
ExchangeMatrix fz_mutate(const ExchangeMatrix& btilde, int k);

}  // namespace mct
