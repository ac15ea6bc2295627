#include "braidhom/matrix.hpp"

#include "braidhom/errors.hpp"

namespace braidhom {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DomainError("ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix dimension mismatch");
  IntMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) out(i, j) += a * o(k, j);
    }
  return out;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DomainError("vector dimension mismatch");
  std::vector<Integer> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (x[j] != 0 && (*this)(i, j) != 0) out[i] += (*this)(i, j) * x[j];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::submatrix(int r0, int r1, int c0, int c1) const {
  IntMatrix s(r1 - r0, c1 - c0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) s(i - r0, j - c0) = (*this)(i, j);
  return s;
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(int dst, int src, const Integer& q) {
  if (q == 0) return;
  for (int j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
}

void IntMatrix::add_col(int dst, int src, const Integer& q) {
  if (q == 0) return;
  for (int i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMatrix::negate_col(int c) {
  for (int i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (int i = 0; i < rank; ++i) out.push_back(D(i, i));
  return out;
}

namespace {

// Applies elementary operations to D and mirrors them on the requested transforms.
struct SmithState {
  IntMatrix& D;
  IntMatrix* U;
  IntMatrix* U_inv;
  IntMatrix* V;
  IntMatrix* V_inv;

  void swap_rows(int a, int b) {
    D.swap_rows(a, b);
    if (U) U->swap_rows(a, b);
    if (U_inv) U_inv->swap_cols(a, b);
  }
  void swap_cols(int a, int b) {
    D.swap_cols(a, b);
    if (V) V->swap_cols(a, b);
    if (V_inv) V_inv->swap_rows(a, b);
  }
  void add_row(int dst, int src, const Integer& q) {
    D.add_row(dst, src, q);
    if (U) U->add_row(dst, src, q);
    if (U_inv) U_inv->add_col(src, dst, -q);
  }
  void add_col(int dst, int src, const Integer& q) {
    D.add_col(dst, src, q);
    if (V) V->add_col(dst, src, q);
    if (V_inv) V_inv->add_row(src, dst, -q);
  }
  void negate_row(int r) {
    D.negate_row(r);
    if (U) U->negate_row(r);
    if (U_inv) U_inv->negate_col(r);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, unsigned transforms) {
  SmithForm f;
  f.D = m;
  const int R = m.rows(), C = m.cols();
  if (transforms & kLeft) f.U = IntMatrix::identity(R);
  if (transforms & kLeftInverse) f.U_inv = IntMatrix::identity(R);
  if (transforms & kRight) f.V = IntMatrix::identity(C);
  if (transforms & kRightInverse) f.V_inv = IntMatrix::identity(C);
  SmithState s{f.D, (transforms & kLeft) ? &f.U : nullptr, (transforms & kLeftInverse) ? &f.U_inv : nullptr,
               (transforms & kRight) ? &f.V : nullptr, (transforms & kRightInverse) ? &f.V_inv : nullptr};
  IntMatrix& D = f.D;

  int t = 0;
  for (; t < std::min(R, C); ++t) {
    for (;;) {
      int pr = -1, pc = -1;
      Integer best;
      for (int i = t; i < R; ++i)
        for (int j = t; j < C; ++j) {
          if (D(i, j) == 0) continue;
          Integer a = abs(D(i, j));
          if (pr < 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) break;
      s.swap_rows(t, pr);
      s.swap_cols(t, pc);
      const Integer p = D(t, t);
      bool clean = true;
      for (int i = t + 1; i < R; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = D(i, t) / p;
        s.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < C; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = D(t, j) / p;
        s.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < R && bad < 0; ++i)
        for (int j = t + 1; j < C; ++j)
          if (D(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      s.add_row(t, bad, 1);
    }
    if (D(t, t) == 0) break;
    if (D(t, t) < 0) s.negate_row(t);
  }
  f.rank = t;
  return f;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& m) {
  auto f = smith_normal_form(m, kRight);
  return f.V.submatrix(0, m.cols(), f.rank, m.cols());
}

}  // namespace braidhom
