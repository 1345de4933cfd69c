#pragma once

#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "fibcalc/algebra/checked.hpp"

namespace fibcalc {

// Dense integer matrix with overflow-checked arithmetic.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  // Throws MalformedInput on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, int cols_if_empty = 0);
  static IntMatrix identity(int n);
  static IntMatrix diagonal(const std::vector<Int>& entries);
  static IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(int r, int c) { return data_[index(r, c)]; }
  Int operator()(int r, int c) const { return data_[index(r, c)]; }

  std::vector<Int> row(int r) const;
  std::vector<Int> column(int c) const;
  std::vector<std::vector<Int>> to_rows() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  std::vector<Int> operator*(const std::vector<Int>& v) const;

  bool is_zero() const;
  bool is_identity() const;

  // Exact determinant (fraction-free Bareiss).
  Int determinant() const;
  // Inverse of a unimodular matrix; throws PreconditionError otherwise.
  IntMatrix unimodular_inverse() const;
  IntMatrix pow(Int exponent) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// U * A * V = D with D diagonal, d_i | d_{i+1}, d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  // Nonzero-or-zero diagonal entries, min(rows, cols) of them.
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace fibcalc
