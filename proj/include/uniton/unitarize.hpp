#pragma once

#include "uniton/loop_matrix.hpp"

namespace uniton {

/// Psi = unitary_part * plus_part with unitary_part based at lambda = 1 and
/// plus_part holomorphic on the disc.
struct IwasawaFactors {
  NumericLoop unitary_part;
  NumericLoop plus_part;
  double residual_unitarity = 0.0;  // max_k |U(l_k)^* U(l_k) - I|_F
  double residual_split = 0.0;      // max_k |Psi - U P|_F / max_k |Psi|_F
  int truncation_order = 0;         // Toeplitz block rows used
};

struct UnitarizeOptions {
  int max_order = 4096;
  double accept_residual = 1e-9;   // relative spectral-factor residual at max_order
  double target_residual = 1e-14;  // early stop
  int residual_samples = 64;
};

/// Iwasawa splitting of a Laurent loop with det(Psi) != 0 on the unit circle.
/// F = Psi~ Psi is factored as G~ G by Cholesky on the banded block Toeplitz
/// matrix of F; then Phi' = Psi G^{-1} is unitary on the circle.
/// Errors: SingularOnCircle, NoConvergence.
IwasawaFactors unitarize(const NumericLoop& psi, const UnitarizeOptions& opt = {});

/// Coefficients of a loop from its values at m equally spaced circle points,
/// for powers lo..hi (m must exceed hi - lo).
NumericLoop loop_from_circle_samples(const std::vector<Matrix<Complex>>& values, int lo, int hi);

/// lambda_k = exp(2 pi i k / m).
std::vector<Complex> circle_points(int m);

}  // namespace uniton
