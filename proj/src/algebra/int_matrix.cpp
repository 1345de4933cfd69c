#include "fibcalc/algebra/int_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace fibcalc {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw MalformedInput("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  std::vector<std::vector<Int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, int cols_if_empty) {
  if (rows.empty()) return IntMatrix(0, cols_if_empty);
  const int cols = static_cast<int>(rows.front().size());
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw MalformedInput("ragged matrix: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(cols));
    }
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& entries) {
  const int n = static_cast<int>(entries.size());
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return m;
}

IntMatrix IntMatrix::block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (int r = 0; r < b.rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
  return m;
}

std::size_t IntMatrix::index(int r, int c) const {
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

std::vector<Int> IntMatrix::row(int r) const {
  return {data_.begin() + static_cast<long>(index(r, 0)),
          data_.begin() + static_cast<long>(index(r, 0)) + cols_};
}

std::vector<Int> IntMatrix::column(int c) const {
  std::vector<Int> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out;
  out.reserve(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw RankMismatch("matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Int a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c)
        out(r, c) = checked::add(out(r, c), checked::mul(a, rhs(k, c)));
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw RankMismatch("matrix sum dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = checked::add(data_[i], rhs.data_[i]);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw RankMismatch("matrix difference dimension mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = checked::sub(data_[i], rhs.data_[i]);
  return out;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw RankMismatch("matrix-vector dimension mismatch");
  std::vector<Int> out(static_cast<std::size_t>(rows_), 0);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r] = checked::add(out[r], checked::mul((*this)(r, c), v[c]));
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
}

bool IntMatrix::is_identity() const { return square() && *this == identity(rows_); }

Int IntMatrix::determinant() const {
  if (!square()) throw PreconditionError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix m = *this;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const Int num = checked::sub(checked::mul(m(k, k), m(i, j)), checked::mul(m(i, k), m(k, j)));
        m(i, j) = num / prev;
      }
    prev = m(k, k);
  }
  return checked::mul(sign, m(n - 1, n - 1));
}

IntMatrix IntMatrix::unimodular_inverse() const {
  if (!square()) throw PreconditionError("inverse of a non-square matrix");
  SmithForm s = smith_normal_form(*this);
  if (!s.d.is_identity()) throw PreconditionError("matrix is not unimodular");
  // U A V = I  =>  A^{-1} = V U.
  return s.v * s.u;
}

IntMatrix IntMatrix::pow(Int exponent) const {
  if (!square()) throw PreconditionError("power of a non-square matrix");
  IntMatrix base = exponent < 0 ? unimodular_inverse() : *this;
  Int e = exponent < 0 ? checked::neg(exponent) : exponent;
  IntMatrix result = identity(rows_);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (int r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  for (int c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
  for (int r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, int dst, int src, Int q) {
  for (int c = 0; c < m.cols(); ++c) m(dst, c) = checked::add(m(dst, c), checked::mul(q, m(src, c)));
}

// (row_i, row_j) <- (x row_i + y row_j, p row_i + q row_j)
void combine_rows(IntMatrix& m, int i, int j, Int x, Int y, Int p, Int q) {
  for (int c = 0; c < m.cols(); ++c) {
    const Int a = m(i, c), b = m(j, c);
    m(i, c) = checked::add(checked::mul(x, a), checked::mul(y, b));
    m(j, c) = checked::add(checked::mul(p, a), checked::mul(q, b));
  }
}

struct Bezout {
  Int g, x, y;
};

// g = gcd(a, b) > 0 with g = x a + y b.
Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = checked::sub(old_r, checked::mul(q, r));
    std::swap(old_r, r);
    old_s = checked::sub(old_s, checked::mul(q, s));
    std::swap(old_s, s);
    old_t = checked::sub(old_t, checked::mul(q, t));
    std::swap(old_t, t);
  }
  if (old_r < 0) return {checked::neg(old_r), checked::neg(old_s), checked::neg(old_t)};
  return {old_r, old_s, old_t};
}

void negate_row(IntMatrix& m, int r) {
  for (int c = 0; c < m.cols(); ++c) m(r, c) = checked::neg(m(r, c));
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const {
  std::vector<Int> out;
  const int n = std::min(d.rows(), d.cols());
  for (int i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row-style Hermite form in place: u is updated so that u * original = m.
// Entries above each pivot are reduced into [0, pivot).
void row_hermite(IntMatrix& m, IntMatrix& u) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    for (;;) {
      int best = -1;
      for (int i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 && (best < 0 || checked::abs(m(i, c)) < checked::abs(m(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) {
        swap_rows(m, best, r);
        swap_rows(u, best, r);
      }
      bool done = true;
      for (int i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        const Int q = m(i, c) / m(r, c);
        add_row(m, i, r, checked::neg(q));
        add_row(u, i, r, checked::neg(q));
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      negate_row(m, r);
      negate_row(u, r);
    }
    for (int i = 0; i < r; ++i) {
      const Int q = floor_div(m(i, c), m(r, c));
      if (q == 0) continue;
      add_row(m, i, r, checked::neg(q));
      add_row(u, i, r, checked::neg(q));
    }
    ++r;
  }
}

bool is_diagonal(const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix vt = IntMatrix::identity(cols);  // transpose of v

  // Alternate row and column Hermite forms until diagonal.
  for (bool rows_turn = true; !is_diagonal(d); rows_turn = !rows_turn) {
    if (rows_turn) {
      row_hermite(d, u);
    } else {
      IntMatrix t = d.transpose();
      row_hermite(t, vt);
      d = t.transpose();
    }
  }

  // Nonzero entries first, then the divisibility chain via
  // diag(a, b) -> diag(gcd, lcm).
  const int n = std::min(rows, cols);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (d(i, i) == 0 && d(j, j) != 0) {
        swap_rows(d, i, j);
        swap_rows(u, i, j);
        swap_cols(d, i, j);
        swap_rows(vt, i, j);
      }
      const Int x0 = d(i, i), y0 = d(j, j);
      if (x0 == 0 || y0 % x0 == 0) continue;
      const auto [g, x, y] = extended_gcd(x0, y0);
      // rows: [[x, y], [-b/g, a/g]]; columns: [[1, -y b/g], [1, x a/g]]
      combine_rows(u, i, j, x, y, checked::neg(y0 / g), x0 / g);
      combine_rows(vt, i, j, 1, 1, checked::neg(checked::mul(y, y0 / g)), checked::mul(x, x0 / g));
      d(i, i) = g;
      d(j, j) = checked::mul(x0 / g, y0);
    }
    if (d(i, i) < 0) {
      d(i, i) = checked::neg(d(i, i));
      negate_row(u, i);
    }
  }
  return {d, u, vt.transpose()};
}

}  // namespace fibcalc
