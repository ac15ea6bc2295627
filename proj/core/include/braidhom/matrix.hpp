#pragma once

#include <vector>

#include "braidhom/integer.hpp"

namespace braidhom {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& other) const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  IntMatrix submatrix(int r0, int r1, int c0, int c1) const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += q * row[src]
  void add_row(int dst, int src, const Integer& q);
  /// col[dst] += q * col[src]
  void add_col(int dst, int src, const Integer& q);
  void negate_row(int r);
  void negate_col(int c);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D with D diagonal, d_1 | d_2 | ... and the zero entries last.
struct SmithForm {
  IntMatrix D;
  IntMatrix U, U_inv;  ///< left transform and its inverse (empty unless requested)
  IntMatrix V, V_inv;  ///< right transform and its inverse (empty unless requested)
  int rank = 0;

  /// Nonzero diagonal entries, all positive.
  std::vector<Integer> invariant_factors() const;
};

enum SmithTransforms : unsigned {
  kNoTransforms = 0,
  kLeft = 1,
  kLeftInverse = 2,
  kRight = 4,
  kRightInverse = 8,
  kAllTransforms = 15,
};

/// Deterministic Smith normal form. Pivots are chosen as the entry of least
/// absolute value in the active block, ties broken by (row, column).
SmithForm smith_normal_form(const IntMatrix& m, unsigned transforms = kAllTransforms);

/// Fraction-free Gaussian elimination (Bareiss).
Integer determinant(const IntMatrix& m);

/// Columns form a basis of the integer kernel {x : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

}  // namespace braidhom
