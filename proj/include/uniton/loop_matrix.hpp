#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "uniton/matrix.hpp"

namespace uniton {

/// n x n Laurent polynomial in lambda: sum_{k=lo}^{hi} lambda^k A_k.
///
/// Coefficients are either exact (RatFun, possibly depending on z) or
/// complex doubles. Both ends are trimmed: exactly for the exact kind, and
/// below 1e-12 of the largest Frobenius norm for the numeric kind. The zero
/// loop has no coefficients.
template <class T>
class LoopMat {
 public:
  static constexpr double kNumericTrim = 1e-12;

  LoopMat() = default;
  explicit LoopMat(int n) : n_(n) {}
  LoopMat(int n, int lo, std::vector<Matrix<T>> coeffs) : n_(n), lo_(lo), c_(std::move(coeffs)) {
    for (const auto& m : c_)
      if (m.rows() != n_ || m.cols() != n_) throw Error(ErrorKind::SizeMismatch, "loop coefficient has wrong size");
    trim();
  }

  static LoopMat constant(const Matrix<T>& m) { return LoopMat(m.rows(), 0, {m}); }
  static LoopMat identity(int n) { return constant(Matrix<T>::identity(n)); }
  /// diag(lambda^{k_1}, ..., lambda^{k_n}).
  static LoopMat diagonal_powers(const std::vector<int>& k) {
    const int n = static_cast<int>(k.size());
    if (n == 0) return LoopMat(0);
    const int lo = *std::min_element(k.begin(), k.end());
    const int hi = *std::max_element(k.begin(), k.end());
    std::vector<Matrix<T>> c(static_cast<std::size_t>(hi - lo + 1), Matrix<T>(n, n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(k[static_cast<std::size_t>(i)] - lo)](i, i) = T(1L);
    return LoopMat(n, lo, std::move(c));
  }
  /// lambda^k times the identity.
  static LoopMat scalar_power(int n, int k) { return LoopMat(n, k, {Matrix<T>::identity(n)}); }

  int n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Matrix<T>>& coeffs() const { return c_; }

  Matrix<T> coeff(int power) const {
    if (c_.empty() || power < lo_ || power > hi()) return Matrix<T>(n_, n_);
    return c_[static_cast<std::size_t>(power - lo_)];
  }

  LoopMat& operator+=(const LoopMat& o) {
    check_size(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int nlo = std::min(lo_, o.lo_);
    const int nhi = std::max(hi(), o.hi());
    std::vector<Matrix<T>> c(static_cast<std::size_t>(nhi - nlo + 1), Matrix<T>(n_, n_));
    for (int p = lo_; p <= hi(); ++p) c[static_cast<std::size_t>(p - nlo)] += c_[static_cast<std::size_t>(p - lo_)];
    for (int p = o.lo_; p <= o.hi(); ++p) c[static_cast<std::size_t>(p - nlo)] += o.c_[static_cast<std::size_t>(p - o.lo_)];
    lo_ = nlo;
    c_ = std::move(c);
    trim();
    return *this;
  }
  friend LoopMat operator+(LoopMat a, const LoopMat& b) { return a += b; }
  friend LoopMat operator-(LoopMat a, const LoopMat& b) { return a += -b; }
  LoopMat operator-() const {
    LoopMat r = *this;
    for (auto& m : r.c_) m = -m;
    return r;
  }
  LoopMat scaled(const T& s) const {
    LoopMat r = *this;
    for (auto& m : r.c_) m = m.scaled(s);
    r.trim();
    return r;
  }
  /// Multiplication by lambda^k.
  LoopMat shifted(int k) const {
    LoopMat r = *this;
    r.lo_ += k;
    return r;
  }

  friend bool operator==(const LoopMat& a, const LoopMat& b) {
    return a.n_ == b.n_ && (a.c_.empty() ? b.c_.empty() : (a.lo_ == b.lo_ && a.c_ == b.c_));
  }
  friend bool operator!=(const LoopMat& a, const LoopMat& b) { return !(a == b); }

  /// Applies f coefficientwise (e.g. z-differentiation); keeps powers.
  template <class Fn>
  LoopMat map_coeffs(Fn&& f) const {
    LoopMat r(n_);
    r.lo_ = lo_;
    for (const auto& m : c_) r.c_.push_back(f(m));
    r.trim();
    return r;
  }

 private:
  void check_size(const LoopMat& o) const {
    if (n_ != o.n_) throw Error(ErrorKind::SizeMismatch, "loop size mismatch");
  }
  void trim();

  int n_ = 0;
  int lo_ = 0;
  std::vector<Matrix<T>> c_;
};

using ExactLoop = LoopMat<RatFun>;
using NumericLoop = LoopMat<Complex>;

template <>
inline void LoopMat<RatFun>::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t first = 0;
  while (first < c_.size() && c_[first].is_zero()) ++first;
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
  if (c_.empty()) lo_ = 0;
}

template <>
inline void LoopMat<Complex>::trim() {
  double mx = 0.0;
  for (const auto& m : c_) mx = std::max(mx, frobenius_norm(m));
  const double cut = kNumericTrim * mx;
  auto negligible = [&](const Matrix<Complex>& m) { return mx == 0.0 || frobenius_norm(m) < cut; };
  while (!c_.empty() && negligible(c_.back())) c_.pop_back();
  std::size_t first = 0;
  while (first < c_.size() && negligible(c_[first])) ++first;
  if (first > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
    lo_ += static_cast<int>(first);
  }
  if (c_.empty()) lo_ = 0;
}

/// Cauchy product of coefficient sequences.
template <class T>
LoopMat<T> multiply(const LoopMat<T>& a, const LoopMat<T>& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::SizeMismatch, "loop product size mismatch");
  if (a.is_zero() || b.is_zero()) return LoopMat<T>(a.n());
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Matrix<T>> c(ac.size() + bc.size() - 1, Matrix<T>(a.n(), a.n()));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i].is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
  }
  return LoopMat<T>(a.n(), a.lo() + b.lo(), std::move(c));
}

template <class T>
LoopMat<T> operator*(const LoopMat<T>& a, const LoopMat<T>& b) {
  return multiply(a, b);
}

/// L~(lambda) = L(1/conj(lambda))^*: coefficient A_k becomes A_k^* at power -k.
/// For exact loops every coefficient must be z-independent.
template <class T>
LoopMat<T> circle_adjoint(const LoopMat<T>& l) {
  if (l.is_zero()) return l;
  std::vector<Matrix<T>> c;
  const auto& src = l.coeffs();
  for (std::size_t k = src.size(); k-- > 0;) c.push_back(src[k].adjoint());
  return LoopMat<T>(l.n(), -l.hi(), std::move(c));
}

/// Numeric value at (lambda0, z0).
Matrix<Complex> evaluate(const NumericLoop& l, Complex lambda0);
Matrix<Complex> evaluate(const ExactLoop& l, Complex lambda0, Complex z0);

/// Exact loop with z-dependent entries at a numeric z.
NumericLoop substitute_z(const ExactLoop& l, Complex z0);
/// Exact loop at an exact point of Q(i); all entries become constants.
ExactLoop substitute_z(const ExactLoop& l, const GaussianRational& z0);
/// Exact value at a lambda in Q(i), entries still functions of z.
Matrix<RatFun> evaluate_lambda(const ExactLoop& l, const GaussianRational& lambda0);

/// Constant-coefficient exact loop to numeric.
NumericLoop to_numeric(const ExactLoop& l);

/// lambda -> u*lambda, i.e. A_k -> u^k A_k.
NumericLoop rescale_lambda(const NumericLoop& l, double u);

/// T(L)(lambda) = L(-lambda) L(-1)^{-1}.
ExactLoop twist_T(const ExactLoop& l);
NumericLoop twist_T(const NumericLoop& l);

/// Right normalization L(lambda) L(1)^{-1}.
ExactLoop based(const ExactLoop& l);
NumericLoop based(const NumericLoop& l);

/// Smallest k with Ad(L) = sum_{|i| <= k} lambda^i T_i.
int ad_width(const ExactLoop& l);
int ad_width(const NumericLoop& l);

/// Exact inverse for loops with det = c * lambda^m, via the adjugate.
ExactLoop inverse(const ExactLoop& l);

/// Largest coefficientwise Frobenius distance.
double max_coeff_distance(const NumericLoop& a, const NumericLoop& b);

/// Energy sum_k k^2 |A_k|_F^2.
double energy(const NumericLoop& l);

}  // namespace uniton
