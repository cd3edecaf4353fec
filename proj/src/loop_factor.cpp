#include "uniton/loop_factor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace uniton {

Matrix<Complex> harmonic_map_at(const ExactLoop& loop, Complex z) {
  return evaluate(unitarize(substitute_z(loop, z)).unitary_part, Complex(-1.0));
}

Matrix<Complex> harmonic_map_at(const ExtendedSolutionSpec& spec, Complex z) {
  return harmonic_map_at(assemble_loop(spec), z);
}

NumericLoop cstar_flow(const ExactLoop& loop, double t, Complex z) {
  if (t < 0) throw Error(ErrorKind::InvalidArgument, "flow time must be non-negative");
  // lambda -> e^{-t} lambda shrinks column b like e^{-t k_b}. Rescaling each column by a
  // positive constant (an element of Lambda^+) keeps the unitary part and keeps the
  // coefficients above the trim threshold; the scale is taken in the log domain.
  const NumericLoop base = substitute_z(loop, z);
  const int n = base.n();
  const auto& c = base.coeffs();
  std::vector<double> log_scale(static_cast<std::size_t>(n), -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < c.size(); ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (std::abs(c[k](a, b)) > 0.0)
          log_scale[static_cast<std::size_t>(b)] = std::max(log_scale[static_cast<std::size_t>(b)], std::log(std::abs(c[k](a, b))) - t * (base.lo() + static_cast<int>(k)));
  std::vector<Matrix<Complex>> out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Matrix<Complex> m(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (std::abs(c[k](a, b)) > 0.0)
          m(a, b) = c[k](a, b) * std::exp(-t * (base.lo() + static_cast<int>(k)) - log_scale[static_cast<std::size_t>(b)]);
    out.push_back(std::move(m));
  }
  return unitarize(NumericLoop(n, base.lo(), std::move(out))).unitary_part;
}

ExtendedSolutionSpec flow_limit(const ExtendedSolutionSpec& spec) {
  ExtendedSolutionSpec out = spec;
  std::erase_if(out.slots, [](const auto& kv) { return kv.first.first != 0; });
  return out;
}

std::vector<NumericLoop> uniton_factorize(const ExtendedSolutionSpec& spec, Complex z) {
  const auto xi = marks_of(spec.exponents);
  if (!xi.is_canonical()) throw Error(ErrorKind::NotCanonical, "uniton factorization needs canonical exponents");
  std::vector<int> steps;
  for (int t = spec.n - 1; t >= 1; --t)
    if (xi.marks[static_cast<std::size_t>(t - 1)] == 1) steps.push_back(t);

  const ExactLoop A = exp_nilpotent(spec.C());
  std::vector<int> k(static_cast<std::size_t>(spec.n), 0);
  std::vector<NumericLoop> factors;
  NumericLoop prev = NumericLoop::identity(spec.n);
  for (int t : steps) {
    for (int a = 0; a < t; ++a) ++k[static_cast<std::size_t>(a)];
    const NumericLoop u = unitarize(substitute_z(A * gamma_loop(k), z)).unitary_part;
    factors.push_back(multiply(circle_adjoint(prev), u));
    prev = u;
  }
  return factors;
}

double projection_factor_residual(const NumericLoop& factor) {
  const int n = factor.n();
  const Matrix<Complex> f0 = factor.coeff(0);
  const Matrix<Complex> f1 = factor.coeff(1);
  double r = std::max({frobenius_norm(f0 * f0 - f0), frobenius_norm(f0.adjoint() - f0),
                       frobenius_norm(f0 + f1 - Matrix<Complex>::identity(n))});
  if (!factor.is_zero())
    for (int p = factor.lo(); p <= factor.hi(); ++p)
      if (p != 0 && p != 1) r = std::max(r, frobenius_norm(factor.coeff(p)));
  return r;
}

WeierstrassData big_cell_check(const ExtendedSolutionSpec& spec) {
  const ExactLoop C = spec.C();
  const ExactLoop A = exp_nilpotent(C);
  const ExactLoop A_z = A.map_coeffs([](const Matrix<RatFun>& m) {
    Matrix<RatFun> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) r(i, j) = differentiate(m(i, j));
    return r;
  });
  std::vector<int> neg;
  for (int k : spec.exponents) neg.push_back(-k);
  const ExactLoop d = gamma_loop(neg) * exp_nilpotent(-C) * A_z * gamma_loop(spec.exponents);
  WeierstrassData out{Matrix<RatFun>(spec.n, spec.n)};
  if (d.is_zero()) return out;
  if (d.lo() != -1 || d.hi() != -1)
    throw Error(ErrorKind::NotInBigCellForm, "Phi^{-1} Phi_z has lambda powers " + std::to_string(d.lo()) + ".." +
                                                 std::to_string(d.hi()) + ", expected only -1");
  out.V = d.coeff(-1);
  return out;
}

}  // namespace uniton
