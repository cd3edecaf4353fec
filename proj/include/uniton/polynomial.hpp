#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "uniton/errors.hpp"

namespace uniton {

inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>(0.0, 0.0); }

namespace detail {
// Unqualified call so that overloads declared after this header are found by ADL.
template <class F>
bool coeff_is_zero(const F& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial over an exact field F, lowest degree first.
/// The coefficient vector is always trimmed: the zero polynomial is empty and
/// otherwise the last coefficient is nonzero.
///
/// F must provide value semantics, the four field operations, equality and a
/// free function `is_zero(const F&)`.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const F& constant) {  // NOLINT(implicit)
    if (!detail::coeff_is_zero(constant)) c_.push_back(constant);
  }

  static UPoly monomial(const F& coeff, int degree) {
    std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0L));
    c.back() = coeff;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F(0L);
    return c_[static_cast<std::size_t>(k)];
  }
  const F& leading() const { return c_.back(); }
  /// Lowest power with a nonzero coefficient; -1 for zero.
  int order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!detail::coeff_is_zero(c_[k])) return static_cast<int>(k);
    return -1;
  }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monomial() const { return !c_.empty() && order() == degree(); }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0L));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0L));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const F& s) const {
    if (detail::coeff_is_zero(s)) return {};
    UPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    if (degree() < d.degree()) return {UPoly{}, *this};
    std::vector<F> r = c_;
    std::vector<F> q(c_.size() - d.c_.size() + 1, F(0L));
    const F inv_lead = F(1L) / d.leading();
    const std::size_t dd = d.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      F t = r[k + dd] * inv_lead;
      if (detail::coeff_is_zero(t)) continue;
      for (std::size_t j = 0; j <= dd; ++j) r[k + j] -= t * d.c_[j];
      q[k] = std::move(t);
    }
    r.resize(dd);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly monic() const {
    if (is_zero()) return {};
    return scaled(F(1L) / leading());
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0L));
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<long>(k));
    return UPoly(std::move(d));
  }

  template <class X>
  X eval(const X& x) const {
    X acc = X(0L);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + X(c_[k]);
    return acc;
  }

  /// Multiplication by t^k (k >= 0).
  UPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<F> c(static_cast<std::size_t>(k), F(0L));
    c.insert(c.end(), c_.begin(), c_.end());
    return UPoly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

template <class F>
bool is_zero(const UPoly<F>& p) {
  return p.is_zero();
}

/// Monic greatest common divisor (zero only when both inputs are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
template <class F>
struct ExtendedGcd {
  UPoly<F> g, s, t;
};

template <class F>
ExtendedGcd<F> extended_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0(F(1L)), s1;
  UPoly<F> t0, t1(F(1L));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F inv = F(1L) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace uniton
