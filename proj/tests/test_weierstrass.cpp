#include "doctest.h"
#include "support.hpp"
#include "uniton/verify.hpp"

using namespace uniton;

namespace {

ExactLoop z_derivative(const ExactLoop& l) {
  return l.map_coeffs([](const Matrix<RatFun>& m) {
    Matrix<RatFun> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = differentiate(m(i, j));
    return r;
  });
}

RatFun entry(const ExtendedSolutionSpec& s, int i, int a, int b) { return s.C().coeff(i)(a, b); }

// Unipotent upper-triangular matrix with the given strictly-upper entries (row-major).
Matrix<RatFun> unitriangular(int n, const std::vector<RatFun>& upper) {
  Matrix<RatFun> u = Matrix<RatFun>::identity(n);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) u(i, j) = upper[k++];
  return u;
}

}  // namespace

TEST_CASE("nilpotent exponential and logarithm") {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 5; ++n) {
    Matrix<RatFun> N(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) N(i, j) = test::random_ratfun(rng, 2);
    CHECK(log_unipotent(exp_nilpotent(N)) == N);
    CHECK(exp_nilpotent(N) * exp_nilpotent(-N) == Matrix<RatFun>::identity(n));
  }
  CHECK_THROWS_AS(exp_nilpotent(Matrix<RatFun>::identity(2)), Error);
}

TEST_CASE("left log derivative series matches exp(-C) (exp C)_z") {
  std::mt19937_64 rng(32);
  for (int n = 2; n <= 4; ++n)
    for (int it = 0; it < 6; ++it) {
      const auto k = test::random_canonical_exponents(rng, n);
      std::vector<Matrix<RatFun>> c(3, Matrix<RatFun>(n, n));
      for (int p = 0; p < 3; ++p)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (k[a] - k[b] > p) c[p](a, b) = test::random_ratfun(rng, 2);
      const ExactLoop C(n, 0, c);
      CHECK(left_log_derivative(C) == exp_nilpotent(-C) * z_derivative(exp_nilpotent(C)));
    }
}

TEST_CASE("slot entry names") {
  CHECK(slot_entry_name(0, 1, 0, 1) == "c1_0[1,2]");
  int i, j, a, b;
  parse_slot_entry_name("c3_2[1,4]", i, j, a, b);
  CHECK(i == 2);
  CHECK(j == 3);
  CHECK(a == 0);
  CHECK(b == 3);
  CHECK_THROWS_AS(parse_slot_entry_name("c3_2[0,4]", i, j, a, b), Error);
  CHECK_THROWS_AS(parse_slot_entry_name("x1_0[1,2]", i, j, a, b), Error);
  CHECK(free_slot_names(4, {3, 2, 1, 0}) ==
        std::vector<std::string>{"c1_0[1,2]", "c1_0[2,3]", "c1_0[3,4]", "c2_1[1,3]", "c2_1[2,4]", "c3_2[1,4]"});
  CHECK(free_slot_names(4, {2, 1, 1, 0}) == std::vector<std::string>{"c1_0[1,2]", "c1_0[1,3]", "c1_0[2,4]", "c1_0[3,4]", "c2_1[1,4]"});
  CHECK(free_slot_names(4, {2, 1, 1, 0}, true).size() == 4);
}

TEST_CASE("exponent validation") {
  CHECK_THROWS_AS(validate_exponents(3, {2, 1}), Error);
  CHECK_THROWS_AS(validate_exponents(3, {1, 2, 0}), Error);
  CHECK_THROWS_AS(validate_exponents(3, {3, 2, 1}), Error);
  CHECK_NOTHROW(validate_exponents(3, {4, 1, 0}));
}

TEST_CASE("zero data gives the geodesic") {
  const auto s = build_from_free_functions(4, {3, 2, 1, 0}, std::map<std::string, RatFun>{});
  CHECK(s.C().is_zero());
  CHECK(assemble_loop(s) == gamma_loop({3, 2, 1, 0}));
}

TEST_CASE("U_4 full flag: e_1 solves its ODE") {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 10; ++it) {
    const auto free = test::random_free_data(rng, 6, 3);
    const auto s = build_from_free_functions(4, {3, 2, 1, 0}, free);
    const RatFun a1 = entry(s, 0, 0, 1), a3 = entry(s, 0, 2, 3);
    const RatFun d1 = entry(s, 1, 0, 2), d2 = entry(s, 1, 1, 3);
    CHECK(a1 == free[0]);
    CHECK(d2 == free[4]);
    CHECK(entry(s, 2, 0, 3) == free[5]);
    const RatFun e1 = entry(s, 1, 0, 3);
    const RatFun rhs = (a1 * differentiate(d2) - differentiate(a1) * d2 + d1 * differentiate(a3) - differentiate(d1) * a3) *
                       RatFun(GaussianRational(Rational(1, 2)));
    CHECK(differentiate(e1) == rhs);
    CHECK(check_extended(s).all_pass());
  }
}

TEST_CASE("builder errors") {
  const RatFun z = RatFun::z();
  // e_1' = -1/z has a logarithmic antiderivative.
  std::map<std::string, RatFun> free{{"c1_0[1,2]", z}, {"c2_1[2,4]", RatFun(1L) / z}};
  try {
    (void)build_from_free_functions(4, {3, 2, 1, 0}, free);
    FAIL("expected NonRationalAntiderivative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonRationalAntiderivative);
    CHECK(std::string(e.what()).find("slot") != std::string::npos);
  }
  CHECK_THROWS_AS(build_from_free_functions(4, {3, 2, 1, 0}, {{"c2_0[1,3]", z}}), Error);
  try {
    (void)even_grassmannian_build(4, {3, 2, 1, 0}, {{"c2_1[1,3]", z}});
    FAIL("expected OddSlotData");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddSlotData);
  }
}

TEST_CASE("n = 4 super-horizontal closed form") {
  std::mt19937_64 rng(34);
  int tested = 0;
  while (tested < 8) {
    const RatFun al = test::random_nonconstant_poly(rng, 3), be = test::random_nonconstant_poly(rng, 3),
                 ga = test::random_nonconstant_poly(rng, 3);
    const RatFun p = differentiate(al) / differentiate(ga), q = differentiate(be) / differentiate(ga);
    if (differentiate(q).is_zero()) continue;
    const RatFun delta = differentiate(p) / differentiate(q);
    const Matrix<RatFun> U = unitriangular(4, {delta, p, al, q, be, ga});
    CHECK(check_superhorizontal(spec_from_C0(log_unipotent(U), {3, 2, 1, 0})).all_pass());
    // Perturbing delta breaks super-horizontality.
    const Matrix<RatFun> W = unitriangular(4, {delta + RatFun::z(), p, al, q, be, ga});
    CHECK_FALSE(check_superhorizontal(spec_from_C0(log_unipotent(W), {3, 2, 1, 0})).all_pass());
    ++tested;
  }
}

TEST_CASE("n = 3 closed form with a free lambda slot") {
  std::mt19937_64 rng(35);
  for (int it = 0; it < 8; ++it) {
    const RatFun al = test::random_poly(rng, 3), be = test::random_nonconstant_poly(rng, 3), ga = test::random_poly(rng, 3);
    const Matrix<RatFun> U = unitriangular(3, {differentiate(al) / differentiate(be), al, be});
    ExtendedSolutionSpec s = spec_from_C0(log_unipotent(U), {2, 1, 0});
    CHECK(check_superhorizontal(s).all_pass());
    Matrix<RatFun> top(3, 3);
    top(0, 2) = ga;
    s.slots[{1, 2}] = top;
    CHECK(check_extended(s).all_pass());
  }
}

TEST_CASE("full flag frame decomposition") {
  std::mt19937_64 rng(36);
  for (int n = 2; n <= 5; ++n) {
    std::vector<RatFun> f;
    for (int a = 0; a < n; ++a) f.push_back(test::random_poly(rng, n + 1));
    f.back() = RatFun(1L);
    f[n - 2] = RatFun::z();
    Matrix<RatFun> U;
    try {
      U = closed_form_full_flag_C0(n, f);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DegenerateFrame);
      continue;
    }
    // Frame columns f^{(n-1)}, ..., f.
    Matrix<RatFun> A(n, n);
    for (int a = 0; a < n; ++a) {
      RatFun g = f[a];
      for (int col = n - 1; col >= 0; --col) {
        A(a, col) = g;
        g = differentiate(g);
      }
    }
    const Matrix<RatFun> L = exp_nilpotent(-log_unipotent(U)) * A;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(L(i, j).is_zero());
    std::vector<int> k;
    for (int a = n - 1; a >= 0; --a) k.push_back(a);
    CHECK(check_superhorizontal(spec_from_C0(log_unipotent(U), k)).all_pass());
  }
  CHECK_THROWS_AS(closed_form_full_flag_C0(3, {RatFun(1L), RatFun(1L), RatFun(1L)}), Error);
}

TEST_CASE("Veronese solutions") {
  for (int n = 2; n <= 5; ++n) {
    const auto s = veronese_solution(n);
    CHECK(s.is_s1_invariant());
    CHECK(check_superhorizontal(s).all_pass());
    CHECK(check_extended(s).all_pass());
    CHECK(ad_width(assemble_loop(s)) == n - 1);
  }
}

TEST_CASE("transforms") {
  std::mt19937_64 rng(37);
  const auto s = build_from_free_functions(4, {3, 2, 1, 0}, test::random_free_data(rng, 6, 2));
  const ExactLoop A = exp_nilpotent(s.C());
  // All marks together reproduce the original solution.
  CHECK(assemble_loop(transform_subset(s, {1, 2, 3})) == assemble_loop(s));
  CHECK(assemble_loop(transform_subset(s, {2})) == A * gamma_loop({1, 1, 0, 0}));
  CHECK(assemble_loop(transform_subset(s, {1, 3})) == A * gamma_loop({2, 1, 1, 0}));
  CHECK_THROWS_AS(transform_subset(s, {}), Error);
  const auto h = build_from_free_functions(3, {1, 1, 0}, std::map<std::string, RatFun>{});
  CHECK_THROWS_AS(transform_subset(h, {1}), Error);
}

TEST_CASE("even builds") {
  std::mt19937_64 rng(38);
  for (const std::vector<int>& k : {std::vector<int>{2, 1, 1, 0}, std::vector<int>{3, 2, 1, 0}, std::vector<int>{2, 1, 0}}) {
    std::map<std::string, RatFun> free;
    for (const auto& name : free_slot_names(static_cast<int>(k.size()), k, true)) free[name] = test::random_poly(rng, 2);
    const auto s = even_grassmannian_build(static_cast<int>(k.size()), k, free);
    CHECK(s.even_only);
    for (const auto& [key, block] : s.slots) CHECK(key.first % 2 == 0);
    CHECK(check_extended(s).all_pass());
    CHECK(check_T_invariant(based(assemble_loop(s))).all_pass());
    if (s.height() <= 2) CHECK(s.is_s1_invariant());
  }
}

TEST_CASE("marks of exponent vectors") {
  CHECK(marks_of({3, 2, 1, 0}).marks == std::vector<int>{1, 1, 1});
  CHECK(marks_of({2, 1, 1, 0}).marks == std::vector<int>{1, 0, 1});
  CHECK(marks_of({4, 1, 0}).marks == std::vector<int>{3, 1});
  CHECK_FALSE(marks_of({4, 1, 0}).is_canonical());
}
