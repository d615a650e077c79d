#include "mct/matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "mct/error.hpp"

namespace mct {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
  return from_rows(columns).transpose();
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<IntVector> IntMatrix::column_list() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) fail(ErrorKind::IndexOutOfRange, "row block out of range");
  IntMatrix m(count, cols_);
  for (std::size_t r = 0; r < count; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(first + r, c);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) = checked_add(p(i, j), checked_mul(aik, b(k, j)));
    }
  return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
  IntMatrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = checked_add(a.data_[i], b.data_[i]);
  return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
  IntMatrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = checked_sub(a.data_[i], b.data_[i]);
  return s;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix s(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) s.data_[i] = checked_sub(0, a.data_[i]);
  return s;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols_ != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  IntVector out(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] = checked_add(out[i], checked_mul(a(i, j), v[j]));
  return out;
}

RationalVector operator*(const IntMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) fail(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  RationalVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) out[i] += v[j] * a(i, j);
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

namespace {

Int exact_div(Int num, Int den) {
  if (den == 0 || num % den != 0) fail(ErrorKind::VerificationFailed, "Bareiss step produced an inexact division");
  return num / den;
}

}  // namespace

Int determinant(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(checked_sub(checked_mul(a(k, k), a(i, j)), checked_mul(a(i, k), a(k, j))), prev);
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Adjugate adjugate(const IntMatrix& m) {
  if (!m.square()) fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {1, IntMatrix{}};
  IntMatrix a(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
    a(r, n + r) = 1;
  }
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return {0, IntMatrix(n, n)};
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(a(k, c), a(r, c));
    }
    const Int pivot = a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Int factor = a(i, k);
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = exact_div(checked_sub(checked_mul(pivot, a(i, j)), checked_mul(factor, a(k, j))), prev);
      }
      a(i, k) = 0;
    }
    prev = pivot;
  }
  // The left block is now prev * I and the right block prev * m^{-1}.
  Adjugate out{prev, IntMatrix(n, n)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.adj(r, c) = a(r, n + c);
  return out;
}

IntMatrix integer_inverse(const IntMatrix& m) {
  const Adjugate adj = adjugate(m);
  if (adj.det == 0) fail(ErrorKind::SingularMatrix, "matrix is singular");
  IntMatrix inv(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (adj.adj(r, c) % adj.det != 0)
        fail(ErrorKind::NonIntegralResult, "inverse has non-integral entries (det = " + std::to_string(adj.det) + ")");
      inv(r, c) = adj.adj(r, c) / adj.det;
    }
  return inv;
}

bool is_permutation_matrix(const IntMatrix& m) {
  if (!m.square()) return false;
  const std::size_t n = m.rows();
  std::vector<int> row_hits(n, 0), col_hits(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Int v = m(r, c);
      if (v == 0) continue;
      if (v != 1) return false;
      ++row_hits[r];
      ++col_hits[c];
    }
  for (std::size_t i = 0; i < n; ++i)
    if (row_hits[i] != 1 || col_hits[i] != 1) return false;
  return true;
}

}  // namespace mct
