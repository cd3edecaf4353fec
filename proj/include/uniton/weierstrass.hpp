#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uniton/loop_matrix.hpp"
#include "uniton/root_system.hpp"

namespace uniton {

/// (lambda power i, grade j) of a coefficient block c^j_i.
using SlotKey = std::pair<int, int>;

/// Phi = exp(C) gamma with C = sum_i lambda^i C_i and gamma = diag(lambda^{k_1}, ..., lambda^{k_n}).
/// Block (i, j) holds the part of C_i in g_j, the entries (a, b) with k_a - k_b = j.
/// Builder output has 0 <= i < j; transforms may also carry blocks with j <= i.
struct ExtendedSolutionSpec {
  int n = 0;
  std::vector<int> exponents;
  std::map<SlotKey, Matrix<RatFun>> slots;
  bool even_only = false;

  int height() const { return exponents.empty() ? 0 : exponents.front() - exponents.back(); }
  int grade(int a, int b) const {
    return exponents[static_cast<std::size_t>(a)] - exponents[static_cast<std::size_t>(b)];
  }
  /// Every block satisfies 0 <= i < j (the exp of the big-cell chart).
  bool is_chart_form() const;
  /// Only the lambda^0 block row is present.
  bool is_s1_invariant() const;
  /// C as a loop in lambda.
  ExactLoop C() const;

  friend bool operator==(const ExtendedSolutionSpec&, const ExtendedSolutionSpec&) = default;
};

/// Phi^{-1} Phi_z = (1/lambda) V for big-cell solutions.
struct WeierstrassData {
  Matrix<RatFun> V;
};

/// Checks exponents: non-increasing, last entry 0, size n.
void validate_exponents(int n, const std::vector<int>& exponents);

/// Splits C into graded blocks with respect to the exponents.
std::map<SlotKey, Matrix<RatFun>> split_slots(const ExactLoop& C, const std::vector<int>& exponents);

/// "c{j}_{i}[a,b]" with 1-based a, b.
std::string slot_entry_name(int i, int j, int a, int b);
/// Inverse of slot_entry_name; SchemaError on malformed input.
void parse_slot_entry_name(const std::string& name, int& i, int& j, int& a, int& b);

/// Names of the free entries c^{i+1}_i in solve order (ascending i, then row-major).
std::vector<std::string> free_slot_names(int n, const std::vector<int>& exponents, bool even_only = false);

/// Sum_{k<n} N^k / k!; NotNilpotent when N^n != 0.
Matrix<RatFun> exp_nilpotent(const Matrix<RatFun>& N);
ExactLoop exp_nilpotent(const ExactLoop& N);
/// Inverse of exp_nilpotent on unipotent matrices; NotNilpotent otherwise.
Matrix<RatFun> log_unipotent(const Matrix<RatFun>& U);

/// (exp C)^{-1} (exp C)_z = sum_k (-1)^k / (k+1)! (ad C)^k C_z.
ExactLoop left_log_derivative(const ExactLoop& C);

/// Solves the triangular integration conditions for all constrained blocks.
/// `free` maps entry names of free slots to functions; missing entries are zero.
ExtendedSolutionSpec build_from_free_functions(int n, const std::vector<int>& exponents,
                                               const std::map<std::string, RatFun>& free, bool even_only = false);
/// Same, with the free values listed in free_slot_names order.
ExtendedSolutionSpec build_from_free_functions(int n, const std::vector<int>& exponents,
                                               const std::vector<RatFun>& free, bool even_only = false);

/// exp C_0 for the full-flag frame A = (f^{(n-1)}, ..., f', f): the unipotent
/// upper-triangular U with A = U L, L lower triangular. DegenerateFrame when
/// the decomposition does not exist.
Matrix<RatFun> closed_form_full_flag_C0(int n, const std::vector<RatFun>& f);

/// S^1-invariant full-flag spec with C = C_0 = log U.
ExtendedSolutionSpec spec_from_C0(const Matrix<RatFun>& C0, const std::vector<int>& exponents);

/// Psi = exp(C) gamma.
ExactLoop assemble_loop(const ExtendedSolutionSpec& spec);
ExactLoop gamma_loop(const std::vector<int>& exponents);

/// Keeps A = exp C and replaces xi by xi_J = sum_{t in J} xi_t, where t in 1..n-1
/// is a simple-root index of A_{n-1}. xi_t has lambda in the first t slots.
ExtendedSolutionSpec transform_subset(const ExtendedSolutionSpec& spec, const std::vector<int>& J);

/// Full flag from the rational normal curve f = (z^{n-1}/(n-1)!, ..., z, 1).
ExtendedSolutionSpec veronese_solution(int n);

/// T-invariant build: only even lambda powers; OddSlotData when free data sits at an odd power.
ExtendedSolutionSpec even_grassmannian_build(int n, const std::vector<int>& exponents,
                                             const std::map<std::string, RatFun>& free);

/// Canonical marks of a U_n exponent vector (A_{n-1} simple-root values k_t - k_{t+1}).
CanonicalElement marks_of(const std::vector<int>& exponents);

}  // namespace uniton
