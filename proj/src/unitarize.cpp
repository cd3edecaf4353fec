#include "uniton/unitarize.hpp"

#include <deque>
#include <numbers>

#include "uniton/numeric.hpp"

namespace uniton {

std::vector<Complex> circle_points(int m) {
  std::vector<Complex> pts;
  for (int k = 0; k < m; ++k) pts.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / m));
  return pts;
}

NumericLoop loop_from_circle_samples(const std::vector<Matrix<Complex>>& values, int lo, int hi) {
  const int m = static_cast<int>(values.size());
  if (m <= hi - lo) throw Error(ErrorKind::InvalidArgument, "too few circle samples for the power window");
  const int n = values.front().rows();
  std::vector<Matrix<Complex>> coeffs;
  for (int p = lo; p <= hi; ++p) {
    Matrix<Complex> acc(n, n);
    for (int k = 0; k < m; ++k)
      acc += values[static_cast<std::size_t>(k)].scaled(std::polar(1.0 / m, -2.0 * std::numbers::pi * k * p / m));
    coeffs.push_back(std::move(acc));
  }
  return NumericLoop(n, lo, std::move(coeffs));
}

namespace {

using Block = Eigen::MatrixXcd;

int next_pow2(int v) {
  int m = 1;
  while (m < v) m *= 2;
  return m;
}

// Factor G of F = G~ G with G = sum_{k=0}^{d} lambda^k G_k, from the rows of the
// Cholesky factor of the block Toeplitz matrix T_ij = (F_{i-j})^T.
class ToeplitzCholesky {
 public:
  ToeplitzCholesky(const std::vector<Block>& f_nonneg, int n) : f_(f_nonneg), n_(n), d_(static_cast<int>(f_nonneg.size()) - 1) {
    for (const auto& b : f_) x_.push_back(b.transpose());
  }

  // Appends the next block row; returns false if the pivot block is not positive definite.
  bool next_row() {
    const int i = rows_;
    std::vector<Block> row(static_cast<std::size_t>(d_ + 1), Block::Zero(n_, n_));  // row[k] = L_{i,i-k}
    const int jmin = std::max(0, i - d_);
    for (int j = jmin; j < i; ++j) {
      const int k = i - j;
      Block s = x_[static_cast<std::size_t>(k)];
      // sum over l in [max(i - d, j - d, 0), j): L_{il} L_{jl}^*
      for (int l = std::max(jmin, j - d_); l < j; ++l)
        s -= row[static_cast<std::size_t>(i - l)] * prev(j)[static_cast<std::size_t>(j - l)].adjoint();
      row[static_cast<std::size_t>(k)] = s * inv_adj(j);
    }
    Block s = x_[0];
    for (int k = 1; k <= std::min(i, d_); ++k) s -= row[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)].adjoint();
    s = 0.5 * (s + s.adjoint()).eval();
    Eigen::LLT<Block> llt(s);
    if (llt.info() != Eigen::Success) return false;
    row[0] = llt.matrixL();
    Block inv = llt.matrixL().solve(Block::Identity(n_, n_));
    rows_buf_.push_back(std::move(row));
    inv_adj_buf_.push_back(inv.adjoint());
    if (static_cast<int>(rows_buf_.size()) > d_ + 1) {
      rows_buf_.pop_front();
      inv_adj_buf_.pop_front();
    }
    ++rows_;
    return true;
  }

  int rows() const { return rows_; }

  std::vector<Block> factor() const {
    std::vector<Block> g;
    for (const auto& m : rows_buf_.back()) g.push_back(m.transpose());
    return g;
  }

  // max_m |F_m - sum_k G_k^* G_{k+m}|_F relative to |F_0|_F.
  double residual(const std::vector<Block>& g) const {
    double r = 0.0;
    for (int m = 0; m <= d_; ++m) {
      Block acc = f_[static_cast<std::size_t>(m)];
      for (int k = 0; k + m <= d_; ++k) acc -= g[static_cast<std::size_t>(k)].adjoint() * g[static_cast<std::size_t>(k + m)];
      r = std::max(r, acc.norm());
    }
    return r / f_[0].norm();
  }

 private:
  const std::vector<Block>& prev(int j) const {
    return rows_buf_[rows_buf_.size() - static_cast<std::size_t>(rows_ - j)];
  }
  const Block& inv_adj(int j) const {
    return inv_adj_buf_[inv_adj_buf_.size() - static_cast<std::size_t>(rows_ - j)];
  }

  std::vector<Block> f_;
  std::vector<Block> x_;
  int n_;
  int d_;
  int rows_ = 0;
  std::deque<std::vector<Block>> rows_buf_;
  std::deque<Block> inv_adj_buf_;
};

}  // namespace

IwasawaFactors unitarize(const NumericLoop& psi, const UnitarizeOptions& opt) {
  if (psi.is_zero()) throw Error(ErrorKind::SingularOnCircle, "zero loop");
  const int n = psi.n();
  const int shift = psi.lo();
  const NumericLoop p = psi.shifted(-shift);
  const int d = p.hi();

  const int m = next_pow2(std::max(64, 4 * (n * d + 1)));
  const auto pts = circle_points(m);
  std::vector<Matrix<Complex>> p_vals;
  double pmax = 0.0;
  for (const auto& l : pts) {
    p_vals.push_back(evaluate(p, l));
    pmax = std::max(pmax, frobenius_norm(p_vals.back()));
  }
  for (const auto& v : p_vals) {
    const double det = std::abs(to_eigen(v).determinant());
    if (!(det > 1e-12 * std::pow(pmax, n))) throw Error(ErrorKind::SingularOnCircle, "loop is singular on the unit circle");
  }

  const NumericLoop f = multiply(circle_adjoint(p), p);
  std::vector<Block> f_nonneg;
  for (int k = 0; k <= d; ++k) f_nonneg.push_back(to_eigen(f.coeff(k)));

  ToeplitzCholesky chol(f_nonneg, n);
  std::vector<Block> g;
  double prev_res = std::numeric_limits<double>::infinity();
  int checkpoint = 16 * std::max(d, 1);
  while (true) {
    while (chol.rows() < checkpoint)
      if (!chol.next_row()) throw Error(ErrorKind::SingularOnCircle, "Toeplitz matrix of Psi~ Psi is not positive definite");
    g = chol.factor();
    const double res = chol.residual(g);
    if (res <= opt.target_residual) break;
    if (res <= opt.accept_residual && res > 0.5 * prev_res) break;  // stagnated
    if (checkpoint >= opt.max_order) {
      if (res <= opt.accept_residual) break;
      throw Error(ErrorKind::NoConvergence,
                  "spectral factor residual " + std::to_string(res) + " after " + std::to_string(checkpoint) + " block rows");
    }
    prev_res = res;
    checkpoint = std::min(2 * checkpoint, opt.max_order);
  }

  std::vector<Matrix<Complex>> g_coeffs;
  for (const auto& b : g) g_coeffs.push_back(from_eigen(b));
  const NumericLoop G(n, 0, std::move(g_coeffs));

  std::vector<Matrix<Complex>> phi_vals;
  for (std::size_t k = 0; k < pts.size(); ++k)
    phi_vals.push_back(p_vals[k] * inverse_numeric(evaluate(G, pts[k]), ErrorKind::SingularOnCircle, "spectral factor singular"));
  const NumericLoop phi = loop_from_circle_samples(phi_vals, 0, m / 2 - 1);
  const Matrix<Complex> phi1 = evaluate(phi, Complex(1.0));
  const Matrix<Complex> phi1_inv = inverse_numeric(phi1, ErrorKind::SingularOnCircle, "unitary factor singular at 1");

  IwasawaFactors out;
  out.unitary_part = multiply(phi, NumericLoop::constant(phi1_inv)).shifted(shift);
  out.plus_part = multiply(NumericLoop::constant(phi1), G);
  out.truncation_order = chol.rows();

  const auto check_pts = circle_points(opt.residual_samples);
  double smax = 0.0;
  for (const auto& l : check_pts) {
    const Matrix<Complex> u = evaluate(out.unitary_part, l);
    const Matrix<Complex> psi_l = evaluate(psi, l);
    out.residual_unitarity = std::max(out.residual_unitarity, frobenius_distance(u.adjoint() * u, Matrix<Complex>::identity(n)));
    out.residual_split = std::max(out.residual_split, frobenius_distance(psi_l, u * evaluate(out.plus_part, l)));
    smax = std::max(smax, frobenius_norm(psi_l));
  }
  out.residual_split /= smax;
  return out;
}

}  // namespace uniton
