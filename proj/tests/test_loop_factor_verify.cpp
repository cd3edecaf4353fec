#include "doctest.h"
#include "support.hpp"
#include "uniton/verify.hpp"

using namespace uniton;

namespace {

ExtendedSolutionSpec random_build(std::mt19937_64& rng, int n, const std::vector<int>& k, int degree = 2) {
  return build_from_free_functions(n, k, test::random_free_data(rng, static_cast<int>(free_slot_names(n, k).size()), degree));
}

// (pi1 + lambda pi1^perp)(pi2 + lambda pi2^perp) with non-commuting rank-one projections.
ExactLoop projection_product() {
  const auto pi1 = test::constant_matrix({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});
  const auto pi2 = test::constant_matrix({{Rational(1, 5), Rational(2, 5)}, {Rational(2, 5), Rational(4, 5)}});
  const Matrix<RatFun> id = Matrix<RatFun>::identity(2);
  return ExactLoop(2, 0, {pi1, id - pi1}) * ExactLoop(2, 0, {pi2, id - pi2});
}

}  // namespace

TEST_CASE("uniton factors are projection loops and reassemble the solution") {
  std::mt19937_64 rng(61);
  const Complex z(0.21, -0.13);
  for (const auto& spec : {veronese_solution(3), veronese_solution(4), random_build(rng, 4, {3, 2, 1, 0}),
                           random_build(rng, 4, {2, 1, 1, 0})}) {
    const auto factors = uniton_factorize(spec, z);
    CHECK(static_cast<int>(factors.size()) == spec.height());
    NumericLoop prod = NumericLoop::identity(spec.n);
    for (const auto& f : factors) {
      CHECK(projection_factor_residual(f) < 1e-10);
      prod = prod * f;
    }
    const NumericLoop u = unitarize(substitute_z(assemble_loop(spec), z)).unitary_part;
    CHECK(max_coeff_distance(prod, u) < 1e-10);
  }
  const auto bad = build_from_free_functions(3, {4, 1, 0}, std::map<std::string, RatFun>{});
  CHECK_THROWS_AS(uniton_factorize(bad, z), Error);
}

TEST_CASE("Weierstrass data of the U_4 chart") {
  std::mt19937_64 rng(62);
  const auto free = test::random_free_data(rng, 6, 3);
  const auto spec = build_from_free_functions(4, {3, 2, 1, 0}, free);
  const Matrix<RatFun> V = big_cell_check(spec).V;
  Matrix<RatFun> expected(4, 4);
  expected(0, 1) = differentiate(free[0]);
  expected(1, 2) = differentiate(free[1]);
  expected(2, 3) = differentiate(free[2]);
  expected(0, 2) = differentiate(free[3]);
  expected(1, 3) = differentiate(free[4]);
  expected(0, 3) = differentiate(free[5]);
  CHECK(V == expected);
  CHECK(big_cell_check(build_from_free_functions(3, {2, 1, 0}, std::map<std::string, RatFun>{})).V.is_zero());
}

TEST_CASE("transforms leave the big cell form") {
  std::mt19937_64 rng(63);
  const auto spec = random_build(rng, 4, {3, 2, 1, 0});
  try {
    (void)big_cell_check(transform_subset(spec, {2}));
    FAIL("expected NotInBigCellForm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInBigCellForm);
  }
}

TEST_CASE("check_extended accepts builder output and rejects perturbed constrained slots") {
  std::mt19937_64 rng(64);
  int perturbed = 0;
  for (const std::vector<int>& k : {std::vector<int>{3, 2, 1, 0}, std::vector<int>{2, 1, 1, 0}, std::vector<int>{4, 3, 2, 1, 0},
                                   std::vector<int>{2, 1, 0}}) {
    const int n = static_cast<int>(k.size());
    const auto spec = random_build(rng, n, k);
    const auto rep = check_extended(spec);
    CHECK(rep.all_pass());
    CHECK(static_cast<int>(rep.checks.size()) == std::max(spec.height() - 1, 0) + 1);
    for (int i = 0; i < spec.height(); ++i)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (spec.grade(a, b) < i + 2) continue;
          ExtendedSolutionSpec p = spec;
          auto& block = p.slots.try_emplace({i, spec.grade(a, b)}, n, n).first->second;
          block(a, b) += test::random_nonconstant_poly(rng, 2) + test::random_ratfun(rng, 1);
          if ((block(a, b) - spec.C().coeff(i)(a, b)).is_constant()) continue;
          CHECK_FALSE(check_extended(p).all_pass());
          ++perturbed;
        }
  }
  CHECK(perturbed > 10);
}

TEST_CASE("U_4 with e_1 + z fails at lambda^1 with a grade 3 witness") {
  std::mt19937_64 rng(65);
  auto spec = random_build(rng, 4, {3, 2, 1, 0}, 3);
  spec.slots[{1, 3}](0, 3) += RatFun::z();
  const auto rep = check_extended(spec);
  CHECK_FALSE(rep.all_pass());
  bool found = false;
  for (const auto& c : rep.checks)
    if (!c.pass) {
      CHECK(c.name == "holomorphic lambda^1 in f_2");
      CHECK(c.evidence.find("g_3") != std::string::npos);
      found = true;
    }
  CHECK(found);
  CHECK(check_extended(build_from_free_functions(3, {2, 1, 0}, std::map<std::string, RatFun>{})).all_pass());
}

TEST_CASE("super-horizontality") {
  CHECK(check_superhorizontal(veronese_solution(4)).all_pass());
  std::mt19937_64 rng(66);
  const auto spec = random_build(rng, 4, {3, 2, 1, 0});
  CHECK_THROWS_AS(check_superhorizontal(spec), Error);
  CHECK(check_superhorizontal(flow_limit(spec)).all_pass());
  // An unconstrained C_0 with a nonconstant grade 2 entry fails.
  Matrix<RatFun> c0(3, 3);
  c0(0, 1) = RatFun::z();
  c0(0, 2) = RatFun::z() * RatFun::z() * RatFun::z();
  c0(1, 2) = RatFun(1L);
  CHECK_FALSE(check_superhorizontal(spec_from_C0(c0, {2, 1, 0})).all_pass());
}

TEST_CASE("uniton number reports") {
  const auto r = uniton_number_report(veronese_solution(4));
  CHECK(r.ad_width == 3);
  CHECK(r.group_bound == 3);
  CHECK(r.width_equals_height);
  const auto c = uniton_number_report(build_from_free_functions(3, {0, 0, 0}, std::map<std::string, RatFun>{}));
  CHECK(c.ad_width == 0);
  std::mt19937_64 rng(67);
  for (const std::vector<int>& k : {std::vector<int>{3, 2, 1, 0}, std::vector<int>{2, 1, 1, 0}, std::vector<int>{1, 1, 0}}) {
    const auto spec = random_build(rng, static_cast<int>(k.size()), k);
    const auto rep = uniton_number_report(spec);
    CHECK(rep.width_equals_height);
    CHECK(rep.within_group_bound);
    CHECK(ad_width(assemble_loop(flow_limit(spec))) == rep.ad_width);
  }
}

TEST_CASE("harmonicity residual") {
  const auto grid = disc_grid(5);
  CHECK(harmonicity_residual([](Complex) { return Matrix<Complex>::identity(2); }, grid, 1e-3) < 1e-12);
  const ExactLoop v2 = assemble_loop(veronese_solution(2));
  auto phi = [&](Complex z) { return harmonic_map_at(v2, z); };
  const double coarse = harmonicity_residual(phi, grid, 1e-2);
  const double fine = harmonicity_residual(phi, grid, 1e-3);
  CHECK(fine <= 1e-5);
  // Second order: one decade in h gains about two decades.
  CHECK(coarse / fine > 50.0);
  auto control = [](Complex z) {
    Matrix<Complex> m = Matrix<Complex>::identity(3);
    m(0, 0) = std::exp(Complex(0.0, std::norm(z)));
    return m;
  };
  CHECK(harmonicity_residual(control, grid, 1e-3) > 1e-2);
  CHECK_THROWS_AS(harmonicity_residual(phi, grid, 0.0), Error);
}

TEST_CASE("T-invariance checks") {
  CHECK(check_T_invariant(gamma_loop({2, 0})).all_pass());
  CHECK(check_T_invariant(gamma_loop({4, 2, 2, 0})).all_pass());
  const auto neg = check_T_invariant(projection_product());
  CHECK_FALSE(neg.all_pass());
  CHECK(neg.checks.size() == 3);
  std::mt19937_64 rng(68);
  std::map<std::string, RatFun> free;
  for (const auto& name : free_slot_names(4, {3, 2, 1, 0}, true)) free[name] = test::random_poly(rng, 2);
  const auto spec = even_grassmannian_build(4, {3, 2, 1, 0}, free);
  const NumericLoop u = unitarize(substitute_z(assemble_loop(spec), Complex(0.2, 0.1))).unitary_part;
  CHECK(check_T_invariant(u).all_pass());
  CHECK_FALSE(check_T_invariant(to_numeric(projection_product())).all_pass());
}

TEST_CASE("flow") {
  std::mt19937_64 rng(69);
  const auto spec = random_build(rng, 3, {2, 1, 0});
  const ExactLoop psi = assemble_loop(spec);
  const Complex z(0.3, 0.1);
  CHECK(max_coeff_distance(cstar_flow(psi, 0.0, z), unitarize(substitute_z(psi, z)).unitary_part) < 1e-12);
  // lambda -> e^{-t} lambda climbs the energy towards the critical manifold.
  const NumericLoop limit = unitarize(substitute_z(assemble_loop(flow_limit(spec)), z)).unitary_part;
  double prev = 0.0;
  for (double t = 0; t <= 6.0; t += 0.5) {
    const double e = energy(cstar_flow(psi, t, z));
    CHECK(e >= prev - 1e-9);
    CHECK(e <= energy(limit) + 1e-9);
    prev = e;
  }
  CHECK(max_coeff_distance(cstar_flow(psi, 16.0, z), limit) < 1e-5);
  // Fixed point.
  const ExactLoop g = gamma_loop({2, 1, 0});
  CHECK(max_coeff_distance(cstar_flow(g, 5.0, z), to_numeric(g)) < 1e-12);
  CHECK_THROWS_AS(cstar_flow(psi, -1.0, z), Error);
}

TEST_CASE("flow for several built specs") {
  std::mt19937_64 rng(70);
  for (const std::vector<int>& k : {std::vector<int>{3, 2, 1, 0}, std::vector<int>{2, 1, 1, 0}}) {
    const auto spec = random_build(rng, 4, k);
    const ExactLoop psi = assemble_loop(spec);
    for (const Complex z : {Complex(0.1, 0.2), Complex(-0.3, 0.05)}) {
      double prev = 0.0;
      for (double t = 0; t <= 6.0; t += 1.0) {
        const double e = energy(cstar_flow(psi, t, z));
        CHECK(e >= prev - 1e-9);
        prev = e;
      }
    }
  }
}
