#pragma once

#include <complex>
#include <optional>
#include <string>

#include "uniton/errors.hpp"
#include "uniton/gaussian_rational.hpp"
#include "uniton/polynomial.hpp"

namespace uniton {

using Poly = UPoly<GaussianRational>;

/// Rational function of z over Q(i) in canonical form: den monic and
/// gcd(num, den) = 1. Zero is 0/1.
class RatFun {
 public:
  RatFun() : den_(GaussianRational(1)) {}
  RatFun(long c) : num_(GaussianRational(c)), den_(GaussianRational(1)) {}  // NOLINT(implicit)
  RatFun(const GaussianRational& c) : num_(c), den_(GaussianRational(1)) {}  // NOLINT(implicit)
  RatFun(Poly num) : num_(std::move(num)), den_(GaussianRational(1)) {}      // NOLINT(implicit)
  RatFun(Poly num, Poly den);

  /// The identity function z.
  static RatFun z() { return RatFun(Poly::monomial(GaussianRational(1), 1)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function; throws for nonconstant input.
  GaussianRational constant_value() const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  RatFun operator-() const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  /// Complex conjugate; only defined for constants since conj(z) is not rational.
  RatFun conj() const;

  /// Exact value at a point of Q(i); throws PoleAtZ on a pole.
  GaussianRational eval(const GaussianRational& z0) const;
  /// Value at a floating point z: the argument is converted exactly, the
  /// function is evaluated exactly and the result is rounded once.
  std::complex<double> eval(std::complex<double> z0) const;

  std::string to_string() const;

 private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }

RatFun differentiate(const RatFun& f);

/// Raised when an integrand has a nonzero logarithmic part. The certificate
/// is the squarefree remainder A/D left by Hermite reduction; `pole` is set
/// when D is linear and the offending pole is therefore known exactly.
class NonRationalAntiderivativeError : public Error {
 public:
  NonRationalAntiderivativeError(RatFun log_part, std::optional<GaussianRational> pole,
                                 const std::string& context);
  const RatFun& log_part() const { return log_part_; }
  const std::optional<GaussianRational>& pole() const { return pole_; }

 private:
  RatFun log_part_;
  std::optional<GaussianRational> pole_;
};

/// Result of Hermite reduction: f = d/dz(rational_part) + log_part with
/// log_part = A/D, D squarefree, deg A < deg D.
struct HermiteReduction {
  RatFun rational_part;
  RatFun log_part;
};

HermiteReduction hermite_reduce(const RatFun& f);

/// Antiderivative with zero constant term in its polynomial part.
/// Throws NonRationalAntiderivativeError when a residue is nonzero.
RatFun integrate_rational(const RatFun& f);

/// Squarefree decomposition (Yun): returns P_1, P_2, ... with p = c * prod P_i^i.
std::vector<Poly> squarefree_factorization(const Poly& p);

}  // namespace uniton
