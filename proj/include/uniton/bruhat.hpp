#pragma once

#include <vector>

#include "uniton/loop_matrix.hpp"

namespace uniton {

/// Cell Lambda^+ gamma_xi containing a loop; exponents non-increasing.
struct BruhatCell {
  std::vector<int> exponents;
};

using LambdaPoly = UPoly<RatFun>;

/// Smith normal form over K[lambda], K = rational functions of z.
/// Returns the diagonal (each entry monic) of U M V for unimodular U, V.
std::vector<LambdaPoly> smith_diagonal(Matrix<LambdaPoly> m);

/// Generic-z cell of an exact loop with det = c(z) lambda^m.
/// Errors: NonMonomialDeterminant.
BruhatCell bruhat_cell(const ExactLoop& loop);

}  // namespace uniton
