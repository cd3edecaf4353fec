#include "uniton/verify.hpp"

#include <algorithm>
#include <numeric>

#include "uniton/numeric.hpp"

namespace uniton {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

ExactLoop z_derivative(const ExactLoop& l) {
  return l.map_coeffs([](const Matrix<RatFun>& m) {
    Matrix<RatFun> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = differentiate(m(i, j));
    return r;
  });
}

// First entry of `m` with grade above `max_grade`, as a witness string.
std::optional<std::string> grade_violation(const ExtendedSolutionSpec& spec, const Matrix<RatFun>& m, int power,
                                           int max_grade) {
  for (int a = 0; a < spec.n; ++a)
    for (int b = 0; b < spec.n; ++b)
      if (spec.grade(a, b) > max_grade && !m(a, b).is_zero())
        return "lambda^" + std::to_string(power) + " coefficient has g_" + std::to_string(spec.grade(a, b)) +
               " entry [" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "] = " + m(a, b).to_string();
  return std::nullopt;
}

std::string spec_context(const ExtendedSolutionSpec& spec) {
  std::string s = "n=" + std::to_string(spec.n) + " exponents=";
  for (std::size_t i = 0; i < spec.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(spec.exponents[i]);
  return s;
}

}  // namespace

VerificationReport check_extended(const ExtendedSolutionSpec& spec) {
  VerificationReport rep;
  rep.context = spec_context(spec);
  const ExactLoop C = spec.C();
  const ExactLoop d = exp_nilpotent(-C) * z_derivative(exp_nilpotent(C));
  for (int i = 0; i <= spec.height() - 2; ++i) {
    CheckResult c;
    c.name = "holomorphic lambda^" + std::to_string(i) + " in f_" + std::to_string(i + 1);
    auto bad = grade_violation(spec, d.coeff(i), i, i + 1);
    c.pass = !bad;
    c.evidence = bad ? *bad : "exact zero above grade " + std::to_string(i + 1);
    rep.checks.push_back(std::move(c));
  }
  rep.checks.push_back({"antiholomorphic", true, "satisfied by construction: C is holomorphic in z", std::nullopt});
  return rep;
}

VerificationReport check_superhorizontal(const ExtendedSolutionSpec& spec) {
  if (!spec.is_s1_invariant()) throw Error(ErrorKind::NotS1Invariant, "spec has blocks at positive lambda powers");
  VerificationReport rep;
  rep.context = spec_context(spec);
  const ExactLoop C = spec.C();
  const ExactLoop d = exp_nilpotent(-C) * z_derivative(exp_nilpotent(C));
  auto bad = grade_violation(spec, d.coeff(0), 0, 1);
  rep.checks.push_back({"superhorizontal", !bad, bad ? *bad : "exact zero above grade 1", std::nullopt});
  return rep;
}

UnitonNumberReport uniton_number_report(const ExtendedSolutionSpec& spec, Complex z_sample) {
  UnitonNumberReport rep;
  const ExactLoop psi = assemble_loop(spec);
  rep.ad_width = spec.is_chart_form() ? ad_width(psi) : ad_width(unitarize(substitute_z(psi, z_sample)).unitary_part);
  const auto marks = marks_of(spec.exponents).marks;
  rep.height = std::accumulate(marks.begin(), marks.end(), 0);
  rep.canonical_bound = static_cast<int>(std::count_if(marks.begin(), marks.end(), [](int m) { return m > 0; }));
  rep.group_bound = spec.n - 1;
  rep.width_equals_height = rep.ad_width == rep.height;
  rep.within_group_bound = rep.ad_width <= rep.group_bound;
  return rep;
}

double harmonicity_residual(const MapSampler& phi, const std::vector<Complex>& grid, double h) {
  if (!(h > 0)) throw Error(ErrorKind::InvalidArgument, "step must be positive");
  double worst = 0.0;
  for (const Complex z : grid) {
    const Matrix<Complex> p0 = phi(z);
    const Matrix<Complex> inv0 = inverse_numeric(p0, ErrorKind::PoleAtZ, "map is singular on the grid");
    Matrix<Complex> div(p0.rows(), p0.cols());
    for (const Complex e : {Complex(h, 0.0), Complex(0.0, h)}) {
      const Matrix<Complex> pp = phi(z + e), pm = phi(z - e);
      // phi^{-1} phi_x on the two half-edges, phi^{-1} averaged over each edge.
      const Matrix<Complex> inv_p = inverse_numeric(pp, ErrorKind::PoleAtZ, "map is singular on the grid");
      const Matrix<Complex> inv_m = inverse_numeric(pm, ErrorKind::PoleAtZ, "map is singular on the grid");
      const Matrix<Complex> flux_p = (inv0 + inv_p) * (pp - p0);
      const Matrix<Complex> flux_m = (inv0 + inv_m) * (p0 - pm);
      div += (flux_p - flux_m).scaled(Complex(0.5 / (h * h)));
    }
    // d_zbar(phi^{-1} phi_z) + d_z(phi^{-1} phi_zbar) = (1/2) div(phi^{-1} grad phi)
    worst = std::max(worst, 0.5 * frobenius_norm(div));
  }
  return worst;
}

VerificationReport check_T_invariant(const ExactLoop& loop) {
  VerificationReport rep;
  rep.context = "exact loop n=" + std::to_string(loop.n());
  const Matrix<RatFun> id = Matrix<RatFun>::identity(loop.n());
  rep.checks.push_back({"based", evaluate_lambda(loop, GaussianRational(1)) == id, "L(1) compared with I exactly", std::nullopt});
  try {
    const bool fixed = twist_T(loop) == loop;
    rep.checks.push_back({"T-fixed", fixed, fixed ? "T(L) = L exactly" : "T(L) differs from L", std::nullopt});
  } catch (const Error& e) {
    rep.checks.push_back({"T-fixed", false, e.what(), std::nullopt});
  }
  const Matrix<RatFun> m = evaluate_lambda(loop, GaussianRational(-1));
  const bool inv = m * m == id;
  rep.checks.push_back({"involution at -1", inv, inv ? "L(-1)^2 = I exactly" : "L(-1)^2 differs from I", std::nullopt});
  return rep;
}

VerificationReport check_T_invariant(const NumericLoop& loop, double tol) {
  VerificationReport rep;
  rep.context = "numeric loop n=" + std::to_string(loop.n());
  const Matrix<Complex> id = Matrix<Complex>::identity(loop.n());
  const double based = frobenius_distance(evaluate(loop, Complex(1.0)), id);
  rep.checks.push_back({"based", based <= tol, "|L(1) - I|", based});
  try {
    const double r = max_coeff_distance(twist_T(loop), loop);
    rep.checks.push_back({"T-fixed", r <= tol, "max coefficient |T(L) - L|", r});
  } catch (const Error& e) {
    rep.checks.push_back({"T-fixed", false, e.what(), std::nullopt});
  }
  const Matrix<Complex> m = evaluate(loop, Complex(-1.0));
  const double r = frobenius_distance(m * m, id);
  rep.checks.push_back({"involution at -1", r <= tol, "|L(-1)^2 - I|", r});
  return rep;
}

std::vector<Complex> disc_grid(int per_side) {
  std::vector<Complex> g;
  const double s = 0.7;
  for (int i = 0; i < per_side; ++i)
    for (int j = 0; j < per_side; ++j) {
      const double x = per_side == 1 ? 0.0 : -s + 2.0 * s * i / (per_side - 1);
      const double y = per_side == 1 ? 0.0 : -s + 2.0 * s * j / (per_side - 1);
      g.emplace_back(x, y);
    }
  return g;
}

}  // namespace uniton
