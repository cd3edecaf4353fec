#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "uniton/errors.hpp"
#include "uniton/ratfun.hpp"

namespace uniton {

using Complex = std::complex<double>;

inline Complex conj_scalar(const Complex& x) { return std::conj(x); }
inline RatFun conj_scalar(const RatFun& x) { return x.conj(); }
inline GaussianRational conj_scalar(const GaussianRational& x) { return x.conj(); }

/// Small dense row-major matrix over an exact or floating scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows * cols), T(0L)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }
  static Matrix unit(int n, int a, int b) {
    Matrix m(n, n);
    m(a, b) = T(1L);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return d_[static_cast<std::size_t>(i * cols_ + j)]; }
  const T& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i * cols_ + j)]; }

  bool is_zero() const {
    for (const auto& x : d_)
      if (!detail::coeff_is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] += o.d_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < d_.size(); ++k) d_[k] -= o.d_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.d_) x = -x;
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::SizeMismatch, "matrix product dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (detail::coeff_is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  Matrix scaled(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.d_) x *= s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }
  Matrix adjoint() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = conj_scalar((*this)(i, j));
    return r;
  }

  const std::vector<T>& data() const { return d_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::SizeMismatch, "matrix sum dimension mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> d_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Inverse over an exact field by Gauss-Jordan elimination; returns false
/// when the matrix is singular.
template <class T>
bool try_inverse_exact(const Matrix<T>& m, Matrix<T>& out) {
  if (!m.square()) throw Error(ErrorKind::SizeMismatch, "inverse of a non-square matrix");
  const int n = m.rows();
  Matrix<T> a = m;
  out = Matrix<T>::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!detail::coeff_is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) return false;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(out(piv, j), out(col, j));
      }
    T inv = T(1L) / a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) *= inv;
      out(col, j) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || detail::coeff_is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        out(r, j) -= f * out(col, j);
      }
    }
  }
  return true;
}

/// Determinant by Laplace expansion with memoized column subsets; works over
/// any commutative ring, which is what the polynomial-entry callers need.
template <class R>
R determinant(const Matrix<R>& m) {
  if (!m.square()) throw Error(ErrorKind::SizeMismatch, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return R(1L);
  if (n > 16) throw Error(ErrorKind::InvalidArgument, "determinant size limit exceeded");
  // memo[mask] = det of rows (n - popcount(mask) .. n-1) against the columns in mask.
  std::vector<R> memo(std::size_t(1) << n);
  std::vector<bool> have(std::size_t(1) << n, false);
  memo[0] = R(1L);
  have[0] = true;
  auto rec = [&](auto&& self, unsigned mask) -> const R& {
    if (have[mask]) return memo[mask];
    const int k = __builtin_popcount(mask);
    const int row = n - k;
    R acc = R(0L);
    int sign_pos = 0;
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const R& entry = m(row, c);
      if (!detail::coeff_is_zero(entry)) {
        R term = entry * self(self, mask & ~(1u << c));
        if (sign_pos % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++sign_pos;
    }
    memo[mask] = std::move(acc);
    have[mask] = true;
    return memo[mask];
  };
  return rec(rec, (1u << n) - 1);
}

template <class R>
Matrix<R> minor_matrix(const Matrix<R>& m, int drop_row, int drop_col) {
  Matrix<R> r(m.rows() - 1, m.cols() - 1);
  for (int i = 0, ri = 0; i < m.rows(); ++i) {
    if (i == drop_row) continue;
    for (int j = 0, rj = 0; j < m.cols(); ++j) {
      if (j == drop_col) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <class R>
Matrix<R> adjugate(const Matrix<R>& m) {
  const int n = m.rows();
  Matrix<R> adj(n, n);
  if (n == 1) {
    adj(0, 0) = R(1L);
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      R d = determinant(minor_matrix(m, j, i));
      adj(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

double frobenius_norm(const Matrix<Complex>& m);

}  // namespace uniton
