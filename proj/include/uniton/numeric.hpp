#pragma once

#include <Eigen/Dense>

#include "uniton/matrix.hpp"

namespace uniton {

inline Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
  Eigen::MatrixXcd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

inline Matrix<Complex> from_eigen(const Eigen::MatrixXcd& m) {
  Matrix<Complex> r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

/// Numeric inverse; throws with `kind` when the matrix is numerically singular.
Matrix<Complex> inverse_numeric(const Matrix<Complex>& m, ErrorKind kind, const char* what);

/// Max Frobenius residual |a - b|.
double frobenius_distance(const Matrix<Complex>& a, const Matrix<Complex>& b);

}  // namespace uniton
