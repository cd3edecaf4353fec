#include "uniton/loop_matrix.hpp"

#include <numbers>

#include "uniton/numeric.hpp"

namespace uniton {

double frobenius_norm(const Matrix<Complex>& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

double frobenius_distance(const Matrix<Complex>& a, const Matrix<Complex>& b) { return frobenius_norm(a - b); }

Matrix<Complex> inverse_numeric(const Matrix<Complex>& m, ErrorKind kind, const char* what) {
  Eigen::MatrixXcd e = to_eigen(m);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(e);
  lu.setThreshold(1e-13);
  if (!lu.isInvertible()) throw Error(kind, what);
  return from_eigen(lu.inverse());
}

Matrix<Complex> evaluate(const NumericLoop& l, Complex lambda0) {
  if (lambda0 == Complex(0.0)) throw Error(ErrorKind::ZeroLambda, "loop evaluated at lambda = 0");
  Matrix<Complex> acc(l.n(), l.n());
  Complex p = std::pow(lambda0, l.lo());
  for (const auto& c : l.coeffs()) {
    acc += c.scaled(p);
    p *= lambda0;
  }
  return acc;
}

NumericLoop substitute_z(const ExactLoop& l, Complex z0) {
  return NumericLoop(l.n(), l.lo(), [&] {
    std::vector<Matrix<Complex>> out;
    for (const auto& c : l.coeffs()) {
      Matrix<Complex> m(l.n(), l.n());
      for (int i = 0; i < l.n(); ++i)
        for (int j = 0; j < l.n(); ++j) m(i, j) = c(i, j).eval(z0);
      out.push_back(std::move(m));
    }
    return out;
  }());
}

ExactLoop substitute_z(const ExactLoop& l, const GaussianRational& z0) {
  return l.map_coeffs([&](const Matrix<RatFun>& c) {
    Matrix<RatFun> m(c.rows(), c.cols());
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) m(i, j) = RatFun(c(i, j).eval(z0));
    return m;
  });
}

Matrix<Complex> evaluate(const ExactLoop& l, Complex lambda0, Complex z0) {
  return evaluate(substitute_z(l, z0), lambda0);
}

Matrix<RatFun> evaluate_lambda(const ExactLoop& l, const GaussianRational& lambda0) {
  if (lambda0.is_zero()) throw Error(ErrorKind::ZeroLambda, "loop evaluated at lambda = 0");
  Matrix<RatFun> acc(l.n(), l.n());
  GaussianRational p(1);
  for (int k = 0; k < l.lo(); ++k) p *= lambda0;
  for (int k = 0; k > l.lo(); --k) p /= lambda0;
  for (const auto& c : l.coeffs()) {
    acc += c.scaled(RatFun(p));
    p *= lambda0;
  }
  return acc;
}

NumericLoop to_numeric(const ExactLoop& l) {
  std::vector<Matrix<Complex>> out;
  for (const auto& c : l.coeffs()) {
    Matrix<Complex> m(l.n(), l.n());
    for (int i = 0; i < l.n(); ++i)
      for (int j = 0; j < l.n(); ++j) {
        if (!c(i, j).is_constant())
          throw Error(ErrorKind::ExactKindUnsupported, "loop entry depends on z; substitute z first");
        m(i, j) = c(i, j).constant_value().to_complex();
      }
    out.push_back(std::move(m));
  }
  return NumericLoop(l.n(), l.lo(), std::move(out));
}

NumericLoop rescale_lambda(const NumericLoop& l, double u) {
  std::vector<Matrix<Complex>> out;
  double p = std::pow(u, l.lo());
  for (const auto& c : l.coeffs()) {
    out.push_back(c.scaled(Complex(p)));
    p *= u;
  }
  return NumericLoop(l.n(), l.lo(), std::move(out));
}

namespace {

template <class T>
LoopMat<T> negate_lambda(const LoopMat<T>& l) {
  std::vector<Matrix<T>> out;
  int k = l.lo();
  for (const auto& c : l.coeffs()) {
    out.push_back((k % 2 == 0) ? c : -c);
    ++k;
  }
  return LoopMat<T>(l.n(), l.lo(), std::move(out));
}

}  // namespace

ExactLoop twist_T(const ExactLoop& l) {
  Matrix<RatFun> at_minus_one = evaluate_lambda(l, GaussianRational(-1));
  Matrix<RatFun> inv;
  if (!try_inverse_exact(at_minus_one, inv))
    throw Error(ErrorKind::SingularAtMinusOne, "loop is singular at lambda = -1");
  return multiply(negate_lambda(l), ExactLoop::constant(inv));
}

NumericLoop twist_T(const NumericLoop& l) {
  Matrix<Complex> inv =
      inverse_numeric(evaluate(l, Complex(-1.0)), ErrorKind::SingularAtMinusOne, "loop is singular at lambda = -1");
  return multiply(negate_lambda(l), NumericLoop::constant(inv));
}

ExactLoop based(const ExactLoop& l) {
  Matrix<RatFun> inv;
  if (!try_inverse_exact(evaluate_lambda(l, GaussianRational(1)), inv))
    throw Error(ErrorKind::NotInvertibleLoop, "loop is singular at lambda = 1");
  return multiply(l, ExactLoop::constant(inv));
}

NumericLoop based(const NumericLoop& l) {
  Matrix<Complex> inv =
      inverse_numeric(evaluate(l, Complex(1.0)), ErrorKind::NotInvertibleLoop, "loop is singular at lambda = 1");
  return multiply(l, NumericLoop::constant(inv));
}

namespace {

using LambdaPoly = UPoly<RatFun>;

// Entries of lambda^{-lo} L as polynomials in lambda.
Matrix<LambdaPoly> polynomial_entries(const ExactLoop& l) {
  Matrix<LambdaPoly> m(l.n(), l.n());
  for (int i = 0; i < l.n(); ++i)
    for (int j = 0; j < l.n(); ++j) {
      std::vector<RatFun> c;
      for (const auto& coeff : l.coeffs()) c.push_back(coeff(i, j));
      m(i, j) = LambdaPoly(std::move(c));
    }
  return m;
}

struct PowerRange {
  int lo = 0;
  int hi = 0;
  bool empty = true;
  void include(int a, int b) {
    if (empty) {
      lo = a;
      hi = b;
      empty = false;
    } else {
      lo = std::min(lo, a);
      hi = std::max(hi, b);
    }
  }
};

// Conjugates each elementary matrix E_ab: (L E_ab L^{-1})_{ij} = L_ia (L^{-1})_bj,
// so its power range is the sum of the ranges of column a of L and row b of L^{-1}.
int width_from_ranges(const std::vector<PowerRange>& columns_of_l, const std::vector<PowerRange>& rows_of_inverse) {
  int width = 0;
  for (const auto& col : columns_of_l)
    for (const auto& row : rows_of_inverse) {
      if (col.empty || row.empty) continue;
      width = std::max({width, -(col.lo + row.lo), col.hi + row.hi});
    }
  return width;
}

struct ExactInverseData {
  Matrix<LambdaPoly> adj;  // adjugate of lambda^{-lo} L
  GaussianRational det_coeff;
  int det_order;
};

ExactInverseData exact_inverse_data(const ExactLoop& l) {
  if (l.is_zero()) throw Error(ErrorKind::NotInvertibleLoop, "zero loop");
  Matrix<LambdaPoly> p = polynomial_entries(l);
  LambdaPoly det = determinant(p);
  if (det.is_zero() || !det.is_monomial())
    throw Error(ErrorKind::NotInvertibleLoop, "determinant is not of the form c * lambda^m");
  const RatFun& c = det.leading();
  if (!c.is_constant())
    throw Error(ErrorKind::NotInvertibleLoop, "determinant coefficient depends on z");
  return {adjugate(p), c.constant_value(), det.order()};
}

}  // namespace

ExactLoop inverse(const ExactLoop& l) {
  auto data = exact_inverse_data(l);
  const int n = l.n();
  int maxdeg = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) maxdeg = std::max(maxdeg, data.adj(i, j).degree());
  std::vector<Matrix<RatFun>> c(static_cast<std::size_t>(maxdeg + 1), Matrix<RatFun>(n, n));
  RatFun inv_c(data.det_coeff.inverse());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& e = data.adj(i, j);
      for (int k = 0; k <= e.degree(); ++k) c[static_cast<std::size_t>(k)](i, j) = e.coeff(k) * inv_c;
    }
  return ExactLoop(n, -l.lo() - data.det_order, std::move(c));
}

int ad_width(const ExactLoop& l) {
  auto data = exact_inverse_data(l);
  const int n = l.n();
  Matrix<LambdaPoly> p = polynomial_entries(l);
  std::vector<PowerRange> cols(static_cast<std::size_t>(n)), rows(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) {
      const auto& e = p(i, a);
      if (!e.is_zero()) cols[static_cast<std::size_t>(a)].include(e.order() + l.lo(), e.degree() + l.lo());
    }
  for (int b = 0; b < n; ++b)
    for (int j = 0; j < n; ++j) {
      const auto& e = data.adj(b, j);
      const int shift = -l.lo() - data.det_order;
      if (!e.is_zero()) rows[static_cast<std::size_t>(b)].include(e.order() + shift, e.degree() + shift);
    }
  return width_from_ranges(cols, rows);
}

namespace {

constexpr double kEntryTrim = 1e-10;

std::vector<Matrix<Complex>> circle_samples(const NumericLoop& l, int m) {
  std::vector<Matrix<Complex>> out;
  for (int j = 0; j < m; ++j) {
    Complex lam = std::polar(1.0, 2.0 * std::numbers::pi * j / m);
    out.push_back(evaluate(l, lam));
  }
  return out;
}

}  // namespace

int ad_width(const NumericLoop& l) {
  if (l.is_zero()) throw Error(ErrorKind::NotInvertibleLoop, "zero loop");
  const int n = l.n();
  const int span = l.hi() - l.lo();
  int m = 8;
  while (m < 2 * (n * span + 1) + 8) m *= 2;
  auto samples = circle_samples(l, m);

  // det(L) must be c * lambda^k: exactly one significant Fourier mode.
  std::vector<Complex> dets;
  for (const auto& s : samples) dets.push_back(to_eigen(s).determinant());
  double dmax = 0.0;
  std::vector<std::pair<int, double>> modes;
  for (int p = n * l.lo(); p <= n * l.hi(); ++p) {
    Complex acc = 0.0;
    for (int j = 0; j < m; ++j) acc += dets[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * j * p / m);
    acc /= double(m);
    modes.emplace_back(p, std::abs(acc));
    dmax = std::max(dmax, std::abs(acc));
  }
  int det_power = 0, significant = 0;
  for (auto [p, a] : modes)
    if (a > 1e-9 * dmax) {
      det_power = p;
      ++significant;
    }
  if (dmax == 0.0 || significant != 1)
    throw Error(ErrorKind::NotInvertibleLoop, "determinant is not of the form c * lambda^m");

  // L^{-1} = adj(L) / (c lambda^k) has powers within [(n-1) lo - k, (n-1) hi - k].
  const int ilo = (n - 1) * l.lo() - det_power;
  const int ihi = (n - 1) * l.hi() - det_power;
  std::vector<Matrix<Complex>> inv_samples;
  for (const auto& s : samples) inv_samples.push_back(inverse_numeric(s, ErrorKind::NotInvertibleLoop, "singular on circle"));
  std::vector<Matrix<Complex>> inv_coeffs;
  for (int p = ilo; p <= ihi; ++p) {
    Matrix<Complex> acc(n, n);
    for (int j = 0; j < m; ++j)
      acc += inv_samples[static_cast<std::size_t>(j)].scaled(std::polar(1.0, -2.0 * std::numbers::pi * j * p / m) / double(m));
    inv_coeffs.push_back(std::move(acc));
  }

  auto entry_ranges = [n](const std::vector<Matrix<Complex>>& coeffs, int lo, bool by_column) {
    double mx = 0.0;
    for (const auto& c : coeffs)
      for (const auto& x : c.data()) mx = std::max(mx, std::abs(x));
    std::vector<PowerRange> r(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (std::abs(coeffs[k](i, j)) > kEntryTrim * mx) {
            const int idx = by_column ? j : i;
            r[static_cast<std::size_t>(idx)].include(lo + static_cast<int>(k), lo + static_cast<int>(k));
          }
    return r;
  };
  return width_from_ranges(entry_ranges(l.coeffs(), l.lo(), true), entry_ranges(inv_coeffs, ilo, false));
}

double max_coeff_distance(const NumericLoop& a, const NumericLoop& b) {
  if (a.n() != b.n()) throw Error(ErrorKind::SizeMismatch, "loop size mismatch");
  double d = 0.0;
  const int lo = std::min(a.is_zero() ? 0 : a.lo(), b.is_zero() ? 0 : b.lo());
  const int hi = std::max(a.is_zero() ? 0 : a.hi(), b.is_zero() ? 0 : b.hi());
  for (int p = lo; p <= hi; ++p) d = std::max(d, frobenius_distance(a.coeff(p), b.coeff(p)));
  return d;
}

double energy(const NumericLoop& l) {
  double e = 0.0;
  int k = l.lo();
  for (const auto& c : l.coeffs()) {
    const double f = frobenius_norm(c);
    e += double(k) * double(k) * f * f;
    ++k;
  }
  return e;
}

}  // namespace uniton
