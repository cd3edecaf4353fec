#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "uniton/ratfun.hpp"

using namespace uniton;

namespace {

RatFun z_poly(std::initializer_list<long> c) {
  std::vector<GaussianRational> v;
  for (long x : c) v.emplace_back(x);
  return RatFun(Poly(std::move(v)));
}

}  // namespace

TEST_CASE("gaussian rationals form a field") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-20, 20);
  auto pick = [&] { return GaussianRational(Rational(d(rng)) / (1 + std::labs(d(rng))), Rational(d(rng)) / 7); };
  for (int it = 0; it < 200; ++it) {
    const auto a = pick(), b = pick(), c = pick();
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK(a * a.inverse() == GaussianRational(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(GaussianRational::parse(a.to_string()) == a);
  }
}

TEST_CASE("exact values round to the nearest double") {
  CHECK(rational_to_double(Rational(1, 3)) == 1.0 / 3.0);
  CHECK(rational_to_double(Rational(1, 10)) == 0.1);
  CHECK(rational_to_double(Rational(-2, 3)) == -2.0 / 3.0);
  // 2^53 + 1 lies halfway between two doubles; ties go to the even one.
  mpz_class big = 1;
  big <<= 53;
  CHECK(rational_to_double(Rational(big + 1)) == std::ldexp(1.0, 53));
  CHECK(rational_to_double(Rational(big + 3)) == std::ldexp(1.0, 53) + 4.0);
  CHECK(GaussianRational(Rational(1, 3), Rational(-1, 7)).to_complex() == Complex(1.0 / 3.0, -1.0 / 7.0));
  const Complex w(0.1, -2.5);
  CHECK(GaussianRational::from_complex(w).to_complex() == w);
}

TEST_CASE("rational functions are kept canonical") {
  const RatFun f = z_poly({-1, 0, 1}) / z_poly({-1, 1});
  CHECK(f == z_poly({1, 1}));
  CHECK(f.is_polynomial());
  const RatFun g = z_poly({2}) / z_poly({4, 2});
  CHECK(g.den() == z_poly({2, 1}).num());
  CHECK(RatFun(0L) == z_poly({}));
  CHECK(g.eval(GaussianRational(0)) == GaussianRational(Rational(1, 2)));
  CHECK_THROWS_AS(g.eval(GaussianRational(-2)), Error);
}

TEST_CASE("derivative obeys product and quotient rules") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    const RatFun f = test::random_ratfun(rng, 3);
    const RatFun g = test::random_ratfun(rng, 3);
    CHECK(differentiate(f * g) == differentiate(f) * g + f * differentiate(g));
    if (!g.is_zero()) CHECK(differentiate(f / g) == (differentiate(f) * g - f * differentiate(g)) / (g * g));
  }
}

TEST_CASE("integration inverts differentiation on exact derivatives") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 60; ++it) {
    const RatFun F = test::random_ratfun(rng, 3);
    const RatFun f = differentiate(F);
    const RatFun G = integrate_rational(f);
    CHECK(differentiate(G) == f);
    // Antiderivatives differ by a constant.
    CHECK((G - F).is_constant());
  }
}

TEST_CASE("nonzero residues are rejected with a certificate") {
  const RatFun inv_z = RatFun(1L) / RatFun::z();
  try {
    (void)integrate_rational(inv_z);
    FAIL("expected NonRationalAntiderivative");
  } catch (const NonRationalAntiderivativeError& e) {
    CHECK(e.kind() == ErrorKind::NonRationalAntiderivative);
    REQUIRE(e.pole().has_value());
    CHECK(*e.pole() == GaussianRational(0));
  }
  try {
    (void)integrate_rational(RatFun(1L) / z_poly({1, 0, 1}));
    FAIL("expected NonRationalAntiderivative");
  } catch (const NonRationalAntiderivativeError& e) {
    CHECK_FALSE(e.pole().has_value());
    CHECK_FALSE(e.log_part().is_zero());
  }
  // 1/z^2 has zero residue.
  CHECK(integrate_rational(RatFun(1L) / z_poly({0, 0, 1})) == RatFun(-1L) / RatFun::z());
}

TEST_CASE("hermite reduction splits off a squarefree log part") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 40; ++it) {
    const RatFun f = test::random_ratfun(rng, 3) / (test::random_ratfun(rng, 2) + RatFun(1L));
    const HermiteReduction h = hermite_reduce(f);
    CHECK(differentiate(h.rational_part) + h.log_part == f);
    const auto sq = squarefree_factorization(h.log_part.den());
    for (std::size_t k = 1; k < sq.size(); ++k) CHECK(sq[k].is_constant());
  }
}

TEST_CASE("squarefree factorization recovers multiplicities") {
  const Poly a = z_poly({-1, 1}).num();
  const Poly b = z_poly({2, 1}).num();
  const Poly p = a * a * b * b * b;
  const auto f = squarefree_factorization(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0].is_constant());
  CHECK(f[1] == a);
  CHECK(f[2] == b);
}
