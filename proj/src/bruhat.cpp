#include "uniton/bruhat.hpp"

#include <algorithm>

namespace uniton {

namespace {

void swap_rows(Matrix<LambdaPoly>& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(Matrix<LambdaPoly>& m, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

std::vector<LambdaPoly> smith_diagonal(Matrix<LambdaPoly> m) {
  const int n = std::min(m.rows(), m.cols());
  std::vector<LambdaPoly> diag;
  for (int t = 0; t < n; ++t) {
    while (true) {
      int pi = -1, pj = -1;
      for (int i = t; i < m.rows(); ++i)
        for (int j = t; j < m.cols(); ++j)
          if (!m(i, j).is_zero() && (pi < 0 || m(i, j).degree() < m(pi, pj).degree())) {
            pi = i;
            pj = j;
          }
      if (pi < 0) {
        diag.resize(static_cast<std::size_t>(n));
        return diag;
      }
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      const LambdaPoly pivot = m(t, t);

      bool clean = true;
      for (int i = t + 1; i < m.rows(); ++i) {
        if (m(i, t).is_zero()) continue;
        const LambdaPoly q = m(i, t).divmod(pivot).first;
        for (int j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
        if (!m(i, t).is_zero()) clean = false;
      }
      for (int j = t + 1; j < m.cols(); ++j) {
        if (m(t, j).is_zero()) continue;
        const LambdaPoly q = m(t, j).divmod(pivot).first;
        for (int i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
        if (!m(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the rest; otherwise fold an offending row in and repeat.
      int bad_row = -1;
      for (int i = t + 1; i < m.rows() && bad_row < 0; ++i)
        for (int j = t + 1; j < m.cols(); ++j)
          if (!m(i, j).divmod(pivot).second.is_zero()) {
            bad_row = i;
            break;
          }
      if (bad_row < 0) break;
      for (int j = t; j < m.cols(); ++j) m(t, j) += m(bad_row, j);
    }
    diag.push_back(m(t, t).monic());
  }
  return diag;
}

namespace {

// Truncated power series in lambda modulo lambda^N.
using Series = std::vector<RatFun>;

int valuation(const Series& s) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (!s[k].is_zero()) return static_cast<int>(k);
  return static_cast<int>(s.size());
}

// Valuations of the invariant factors over K[[lambda]] / lambda^N. With det = c lambda^m and
// N > m these are the lambda-exponents of the Smith form over K[lambda].
std::vector<int> local_smith_exponents(Matrix<Series> m, int N) {
  const int n = m.rows();
  std::vector<int> out;
  for (int t = 0; t < n; ++t) {
    int pi = -1, pj = -1, best = N;
    for (int i = t; i < n; ++i)
      for (int j = t; j < n; ++j) {
        const int v = valuation(m(i, j));
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) throw Error(ErrorKind::NonMonomialDeterminant, "loop is singular modulo lambda^N");
    for (int j = 0; j < n; ++j) std::swap(m(t, j), m(pi, j));
    for (int i = 0; i < n; ++i) std::swap(m(i, t), m(i, pj));
    const int v = best;
    // Division free: row_i <- u row_i - (e / lambda^v) row_t with the unit u = pivot / lambda^v.
    // Scaling a row by a unit keeps the
    // valuations, and the pivot divides the rest of its row, so the matching column
    // operations leave the trailing block unchanged.
    const Series pivot = m(t, t);
    for (int i = t + 1; i < n; ++i) {
      const Series e = m(i, t);
      if (valuation(e) >= N) continue;
      for (int j = t; j < n; ++j) {
        const Series& row = m(t, j);
        const Series old = m(i, j);
        Series next(static_cast<std::size_t>(N), RatFun(0L));
        for (int a = 0; a < N - v; ++a) {
          const RatFun& pu = pivot[static_cast<std::size_t>(v + a)];
          const RatFun& eu = e[static_cast<std::size_t>(v + a)];
          for (int b = 0; a + b < N; ++b) {
            if (!pu.is_zero() && !old[static_cast<std::size_t>(b)].is_zero())
              next[static_cast<std::size_t>(a + b)] += pu * old[static_cast<std::size_t>(b)];
            if (!eu.is_zero() && !row[static_cast<std::size_t>(b)].is_zero())
              next[static_cast<std::size_t>(a + b)] -= eu * row[static_cast<std::size_t>(b)];
          }
        }
        m(i, j) = std::move(next);
      }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

BruhatCell bruhat_cell(const ExactLoop& loop) {
  if (loop.is_zero()) throw Error(ErrorKind::NonMonomialDeterminant, "zero loop");
  const int n = loop.n();
  Matrix<LambdaPoly> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<RatFun> c;
      for (const auto& coeff : loop.coeffs()) c.push_back(coeff(i, j));
      m(i, j) = LambdaPoly(std::move(c));
    }
  const LambdaPoly det = determinant(m);
  if (det.is_zero() || !det.is_monomial())
    throw Error(ErrorKind::NonMonomialDeterminant, "determinant is not of the form c(z) lambda^m");

  // Every invariant factor divides lambda^m, so the reduction can run modulo lambda^{m+1}.
  const int N = det.degree() + 1;
  Matrix<Series> local(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Series s(static_cast<std::size_t>(N), RatFun(0L));
      for (int k = 0; k < N; ++k) s[static_cast<std::size_t>(k)] = m(i, j).coeff(k);
      local(i, j) = std::move(s);
    }
  BruhatCell cell;
  for (int e : local_smith_exponents(std::move(local), N)) cell.exponents.push_back(e + loop.lo());
  std::sort(cell.exponents.rbegin(), cell.exponents.rend());
  return cell;
}

}  // namespace uniton
