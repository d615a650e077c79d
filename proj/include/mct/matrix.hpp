#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mct {

using Int = std::int64_t;
using IntVector = std::vector<Int>;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

Int dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const IntVector& b);

// Dense row-major integer matrix. All arithmetic is overflow-checked; the
// matrices in this library are tiny (at most a dozen rows) so there is no
// attempt at blocking or expression templates.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  // Columns are given as vectors of equal length; an empty list yields 0x0.
  static IntMatrix from_columns(const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;
  std::vector<IntVector> column_list() const;

  IntMatrix transpose() const;
  // Rows [first, first + count) as a new matrix.
  IntMatrix row_block(std::size_t first, std::size_t count) const;

  bool operator==(const IntMatrix& other) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

RationalVector operator*(const IntMatrix& a, const RationalVector& v);

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

struct Adjugate {
  Int det = 0;
  IntMatrix adj;  // det * inverse
};

// Fraction-free Gauss-Jordan on [A | I]; every intermediate division is exact.
Adjugate adjugate(const IntMatrix& m);

// Exact inverse of an integer matrix whose inverse is again integral.
// Throws SingularMatrix or NonIntegralResult.
IntMatrix integer_inverse(const IntMatrix& m);

bool is_permutation_matrix(const IntMatrix& m);

}  // namespace mct
