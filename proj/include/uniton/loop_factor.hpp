#pragma once

#include <vector>

#include "uniton/unitarize.hpp"
#include "uniton/weierstrass.hpp"

namespace uniton {

/// phi(z) = Phi_u(z, -1) for Phi_u the unitary part of the loop at z.
Matrix<Complex> harmonic_map_at(const ExactLoop& loop, Complex z);
Matrix<Complex> harmonic_map_at(const ExtendedSolutionSpec& spec, Complex z);

/// Unitary part of Psi(z, e^{-t} lambda).
NumericLoop cstar_flow(const ExactLoop& loop, double t, Complex z);

/// exp(C_0) gamma: the limit of the flow as t -> infinity.
ExtendedSolutionSpec flow_limit(const ExtendedSolutionSpec& spec);

/// Unitary parts of A gamma_{t_1} ... gamma_{t_j}, marks taken in decreasing t,
/// returned as successive quotients Phi_{j-1}^{-1} Phi_j. Each has the form pi + lambda pi^perp.
/// Errors: NotCanonical.
std::vector<NumericLoop> uniton_factorize(const ExtendedSolutionSpec& spec, Complex z);

/// Deviation of a loop from pi + lambda (I - pi) with pi a Hermitian projection:
/// max of |F_0^2 - F_0|, |F_0^* - F_0|, |F_0 + F_1 - I| and any other coefficient norm.
double projection_factor_residual(const NumericLoop& factor);

/// V with Phi^{-1} Phi_z = V / lambda; NotInBigCellForm when another power survives.
WeierstrassData big_cell_check(const ExtendedSolutionSpec& spec);

}  // namespace uniton
