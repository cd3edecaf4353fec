#include "doctest.h"
#include "support.hpp"
#include "uniton/unitarize.hpp"

using namespace uniton;

namespace {

// Psi = [[I, B], [0, I]] diag(lambda I_k, I_{n-k}): the unitary part is pi + lambda pi^perp
// with pi the projection onto the column span of [B; I].
Matrix<Complex> grassmannian_oracle(const Matrix<Complex>& B, int k, int n) {
  Matrix<Complex> span(n, n - k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n - k; ++j) span(i, j) = B(i, j);
  for (int j = 0; j < n - k; ++j) span(k + j, j) = 1.0;
  return test::column_span_projection(span);
}

NumericLoop grassmannian_loop(const Matrix<Complex>& B, int k, int n) {
  Matrix<Complex> e = Matrix<Complex>::identity(n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n - k; ++j) e(i, k + j) = B(i, j);
  std::vector<int> ex(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) ex[static_cast<std::size_t>(i)] = 1;
  return NumericLoop::constant(e) * NumericLoop::diagonal_powers(ex);
}

Matrix<Complex> random_complex(std::mt19937_64& rng, int r, int c) {
  std::normal_distribution<double> d;
  Matrix<Complex> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

}  // namespace

TEST_CASE("circle samples reconstruct coefficients") {
  std::mt19937_64 rng(41);
  const NumericLoop l(3, -2, {random_complex(rng, 3, 3), random_complex(rng, 3, 3), random_complex(rng, 3, 3), random_complex(rng, 3, 3)});
  const auto pts = circle_points(16);
  std::vector<Matrix<Complex>> vals;
  for (Complex p : pts) vals.push_back(evaluate(l, p));
  CHECK(max_coeff_distance(loop_from_circle_samples(vals, -4, 4), l) < 1e-13);
}

TEST_CASE("Grassmannian oracle") {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      for (int it = 0; it < 3; ++it) {
        const Matrix<Complex> B = random_complex(rng, k, n - k);
        const IwasawaFactors f = unitarize(grassmannian_loop(B, k, n));
        const Matrix<Complex> pi = grassmannian_oracle(B, k, n);
        const NumericLoop expected(n, 0, {pi, Matrix<Complex>::identity(n) - pi});
        CHECK(max_coeff_distance(f.unitary_part, expected) < 1e-10);
        CHECK(f.residual_unitarity < 1e-10);
        CHECK(f.residual_split < 1e-10);
      }
}

TEST_CASE("unitary loops are fixed and plus loops are absorbed") {
  std::mt19937_64 rng(43);
  const Matrix<Complex> B = random_complex(rng, 1, 2);
  const NumericLoop u = unitarize(grassmannian_loop(B, 1, 3)).unitary_part;
  const IwasawaFactors again = unitarize(u);
  CHECK(max_coeff_distance(again.unitary_part, u) < 1e-10);
  CHECK(max_coeff_distance(again.plus_part, NumericLoop::identity(3)) < 1e-10);

  // Right multiplication by a loop holomorphic and invertible on the disc does not change the unitary part.
  Matrix<Complex> p1 = random_complex(rng, 3, 3).scaled(0.2);
  const NumericLoop plus(3, 0, {Matrix<Complex>::identity(3), p1});
  const IwasawaFactors f = unitarize(u * plus);
  CHECK(max_coeff_distance(f.unitary_part, u) < 1e-9);
}

TEST_CASE("splitting of a random Laurent loop") {
  std::mt19937_64 rng(44);
  for (int n = 1; n <= 4; ++n) {
    const NumericLoop psi(n, -1, {random_complex(rng, n, n).scaled(0.3), Matrix<Complex>::identity(n).scaled(3.0) + random_complex(rng, n, n).scaled(0.3), random_complex(rng, n, n).scaled(0.3)});
    const IwasawaFactors f = unitarize(psi);
    CHECK(f.residual_unitarity < 1e-9);
    CHECK(f.residual_split < 1e-9);
    CHECK(test::max_abs_diff(evaluate(f.unitary_part, 1.0), Matrix<Complex>::identity(n)) < 1e-10);
    CHECK(f.plus_part.lo() >= 0);
  }
}

TEST_CASE("singular loops are rejected") {
  Matrix<Complex> m = Matrix<Complex>::identity(2);
  m(1, 1) = 0.0;
  CHECK_THROWS_AS(unitarize(NumericLoop::constant(m)), Error);
  // det = lambda - 1 vanishes on the circle.
  const NumericLoop l(1, 0, {Matrix<Complex>::identity(1).scaled(-1.0), Matrix<Complex>::identity(1)});
  try {
    (void)unitarize(l);
    FAIL("expected SingularOnCircle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularOnCircle);
  }
}
