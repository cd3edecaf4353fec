#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "uniton/loop_factor.hpp"

namespace uniton {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string evidence;             // exact witness or note
  std::optional<double> residual;   // numeric checks only
};

struct VerificationReport {
  std::string context;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

/// A^{-1} A_z for A = exp C, computed as exp(-C) (exp C)_z; each lambda^i
/// coefficient must lie in f_{i+1} (grades <= i + 1).
VerificationReport check_extended(const ExtendedSolutionSpec& spec);

/// (exp C_0)^{-1} (exp C_0)_z has grades <= 1. Errors: NotS1Invariant.
VerificationReport check_superhorizontal(const ExtendedSolutionSpec& spec);

struct UnitonNumberReport {
  int ad_width = 0;
  int height = 0;          // r(xi) of the exponents
  int canonical_bound = 0; // height of the canonical reduction
  int group_bound = 0;     // r(SU_n) = n - 1
  bool width_equals_height = false;
  bool within_group_bound = false;
};

/// Chart-form specs use the exact width of exp(C) gamma (generic z); other
/// specs use the numeric width of the unitary part at `z_sample`.
UnitonNumberReport uniton_number_report(const ExtendedSolutionSpec& spec, Complex z_sample = {0.3141, 0.2718});

using MapSampler = std::function<Matrix<Complex>(Complex)>;

/// max over the grid of |d_zbar(phi^{-1} phi_z) + d_z(phi^{-1} phi_zbar)|_F, discretized in
/// divergence form on the 5-point stencil with step h (second order).
double harmonicity_residual(const MapSampler& phi, const std::vector<Complex>& grid, double h);

/// T(L) = L for a loop based at 1, and then L(-1)^2 = I.
VerificationReport check_T_invariant(const ExactLoop& loop);
VerificationReport check_T_invariant(const NumericLoop& loop, double tol = 1e-9);

/// per_side x per_side square grid on [-0.7, 0.7]^2, inside the unit disc.
std::vector<Complex> disc_grid(int per_side);

}  // namespace uniton
