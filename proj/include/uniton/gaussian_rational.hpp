#pragma once

#include <complex>
#include <gmpxx.h>
#include <string>
#include <string_view>

namespace uniton {

using Rational = mpq_class;

/// Exact element of Q(i). Both parts are kept canonical by GMP, so equality
/// is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(implicit)
  GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Each part rounded to the nearest double.
  std::complex<double> to_complex() const;

  /// Exact conversion of a double pair (every finite double is a dyadic rational).
  static GaussianRational from_complex(std::complex<double> z);

  /// "p/q", "p/q+r/s i", "r/s i" style rendering.
  std::string to_string() const;
  /// Parses the output of to_string and plain rationals like "-3/4".
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

/// "p/q" rendering of a rational with an explicit denominator.
std::string rational_to_string(const Rational& q);
Rational parse_rational(std::string_view text);
/// Round to nearest, ties to even.
double rational_to_double(const Rational& q);

}  // namespace uniton
