#pragma once

#include <random>
#include <vector>

#include "uniton/numeric.hpp"
#include "uniton/weierstrass.hpp"

namespace uniton::test {

/// Polynomial in z of degree <= max_degree with small integer coefficients,
/// optionally Gaussian.
inline RatFun random_poly(std::mt19937_64& rng, int max_degree, bool gaussian = false) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<GaussianRational> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = GaussianRational(Rational(coef(rng)), Rational(gaussian ? coef(rng) : 0));
  return RatFun(Poly(std::move(c)));
}

/// Nonconstant polynomial of degree 1..max_degree.
inline RatFun random_nonconstant_poly(std::mt19937_64& rng, int max_degree) {
  for (;;) {
    RatFun f = random_poly(rng, max_degree);
    if (!f.is_constant()) return f;
  }
}

/// Random rational function p/q with q monic of degree <= max_degree.
inline RatFun random_ratfun(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<GaussianRational> d(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : d) x = GaussianRational(coef(rng));
  d.back() = GaussianRational(1);
  return random_poly(rng, max_degree) / RatFun(Poly(std::move(d)));
}

/// Canonical U_n exponents: steps of 0 or 1, ending in 0.
inline std::vector<int> random_canonical_exponents(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution step(0.6);
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  for (int a = n - 2; a >= 0; --a) k[static_cast<std::size_t>(a)] = k[static_cast<std::size_t>(a + 1)] + (step(rng) ? 1 : 0);
  return k;
}

inline std::vector<RatFun> random_free_data(std::mt19937_64& rng, int count, int max_degree) {
  std::vector<RatFun> out;
  for (int i = 0; i < count; ++i) out.push_back(random_poly(rng, max_degree));
  return out;
}

inline Matrix<RatFun> constant_matrix(const std::vector<std::vector<GaussianRational>>& rows) {
  const int n = static_cast<int>(rows.size());
  Matrix<RatFun> m(n, static_cast<int>(rows.front().size()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = RatFun(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

/// Hermitian projection onto the column span of a (full column rank).
inline Matrix<Complex> column_span_projection(const Matrix<Complex>& a) {
  const Eigen::MatrixXcd A = to_eigen(a);
  const Eigen::MatrixXcd G = A.adjoint() * A;
  return from_eigen(A * G.inverse() * A.adjoint());
}

inline double max_abs_diff(const Matrix<Complex>& a, const Matrix<Complex>& b) { return frobenius_distance(a, b); }

}  // namespace uniton::test
