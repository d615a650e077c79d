#include "mct/exchange.hpp"

#include "mct/error.hpp"
#include "mct/regions.hpp"

namespace mct {

IntMatrix euler_matrix(const SignSequence& epsilon) {
  const int n = epsilon.size();
  if (n < 2) fail(ErrorKind::InvalidInput, "the quiver needs n >= 2");
  IntMatrix e = IntMatrix::identity(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 2; ++i) {
    const auto a = static_cast<std::size_t>(i - 1);
    if (epsilon.at(i + 1) > 0)
      e(a + 1, a) = -1;  // i+1 -> i
    else
      e(a, a + 1) = -1;  // i -> i+1
  }
  return e;
}

IntMatrix x_matrix(const SignSequence& epsilon) {
  const IntMatrix e = euler_matrix(epsilon);
  return e - e.transpose();
}

bool is_skew_symmetric(const IntMatrix& m) {
  return m.square() && m.transpose() == -m;
}

ExchangeMatrix::ExchangeMatrix(IntMatrix principal, IntMatrix bottom)
    : principal_(std::move(principal)), bottom_(std::move(bottom)) {
  if (!principal_.square() || bottom_.rows() != principal_.rows() || bottom_.cols() != principal_.cols())
    fail(ErrorKind::DimensionMismatch, "exchange matrix blocks must both be m x m");
  if (!is_skew_symmetric(principal_)) fail(ErrorKind::InvalidInput, "principal part is not skew-symmetric");
}

ExchangeMatrix ExchangeMatrix::from_stacked(const IntMatrix& stacked) {
  const std::size_t m = stacked.cols();
  if (stacked.rows() != 2 * m) fail(ErrorKind::DimensionMismatch, "stacked exchange matrix must be 2m x m");
  return ExchangeMatrix(stacked.row_block(0, m), stacked.row_block(m, m));
}

IntMatrix ExchangeMatrix::stacked() const {
  const std::size_t m = principal_.cols();
  IntMatrix s(2 * m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      s(r, c) = principal_(r, c);
      s(m + r, c) = bottom_(r, c);
    }
  return s;
}

ExchangeMatrix exchange_matrix(const MixedCobinaryTree& tree) {
  if (tree.n() < 2) return {};
  const CMatrix c = c_matrix(tree);
  return ExchangeMatrix(c.transpose() * x_matrix(tree.epsilon()) * c, c);
}

ExchangeMatrix fz_mutate(const ExchangeMatrix& btilde, int k) {
  const int m = btilde.rank();
  if (k < 1 || k > m) fail(ErrorKind::IndexOutOfRange, "mutation direction " + std::to_string(k) + " out of range");
  const IntMatrix b = btilde.stacked();
  IntMatrix out = b;
  const auto kk = static_cast<std::size_t>(k - 1);
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == kk || j == kk) {
        out(i, j) = -b(i, j);
        continue;
      }
      const Int bik = b(i, kk);
      const Int bkj = b(kk, j);
      if ((bik > 0 && bkj > 0) || (bik < 0 && bkj < 0))
        out(i, j) = checked_add(b(i, j), checked_mul(bik, bkj < 0 ? -bkj : bkj));
    }
  }
  return ExchangeMatrix::from_stacked(out);
}

}  // namespace mct
