#pragma once

#include <map>
#include <string>
#include <vector>

namespace uniton {

using IntMatrix = std::vector<std::vector<int>>;
using RootVector = std::vector<int>;  // coefficients over the simple roots

/// Reduced irreducible root system with Bourbaki numbering of simple roots.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  IntMatrix gram;    // (alpha_i, alpha_j), scaled so short roots have length^2 = 2
  IntMatrix cartan;  // a_ij = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
  std::vector<RootVector> positive_roots;  // sorted by (height, coefficients)
  RootVector highest_root;

  int dimension() const { return rank + 2 * static_cast<int>(positive_roots.size()); }
};

/// xi = sum_i marks_i xi_i in terms of the dual basis of the simple roots.
struct CanonicalElement {
  std::vector<int> marks;
  bool is_canonical() const;
  friend bool operator==(const CanonicalElement&, const CanonicalElement&) = default;
};

/// Types A1+, B2+, C2+, D3+, E6-8, F4, G2; InvalidType otherwise.
RootSystem build_root_system(char type, int rank);

/// Positive roots generated from a Gram matrix of simple roots by root-string closure.
std::vector<RootVector> positive_roots_from_gram(const IntMatrix& gram);

/// alpha(xi) for a root given by coefficients.
int root_value(const RootVector& root, const CanonicalElement& xi);

int height_of(const RootSystem& rs, const CanonicalElement& xi);
/// Sum of the highest-root coefficients.
int group_max_uniton(const RootSystem& rs);
/// i -> dim g^xi_i over all i with a nonzero space.
std::map<int, int> grading(const RootSystem& rs, const CanonicalElement& xi);
int morse_index(const RootSystem& rs, const CanonicalElement& xi);
int big_cell_fiber_dim(const RootSystem& rs, const CanonicalElement& xi);
int free_function_count(const RootSystem& rs, const CanonicalElement& xi);
CanonicalElement canonical_reduce(const RootSystem& rs, const CanonicalElement& xi);
CanonicalElement odd_canonical_reduce(const RootSystem& rs, const CanonicalElement& xi);

/// Semisimple type plus center dimension of a reductive subalgebra,
/// e.g. {"A1","A2"} + 1 for s(u_2 + u_3). Components are sorted.
struct SubalgebraSignature {
  std::vector<std::string> components;
  int center_dim = 0;
  std::string to_string() const;
  friend bool operator==(const SubalgebraSignature&, const SubalgebraSignature&) = default;
};

struct SymmetricSpaceRecord {
  CanonicalElement xi;
  SubalgebraSignature fixed;  // type of k = sum of the even-graded pieces
  int height = 0;
};

/// One record per canonical element (all 2^l mark patterns), in binary order of the marks.
std::vector<SymmetricSpaceRecord> symmetric_space_survey(const RootSystem& rs);

/// Maximal height over survey records whose fixed subalgebra matches; -1 when none match.
int r_of_N(const std::vector<SymmetricSpaceRecord>& survey, const SubalgebraSignature& k);

/// Classifies a connected simple system given its Gram matrix. Low-rank
/// coincidences are normalized (C2 -> B2, D3 -> A3); UnrecognizedSubsystem on failure.
std::string classify_simple_component(const IntMatrix& gram);

/// Complexified fixed subalgebras of the classical families, normalized like the survey.
namespace fixed_type {
SubalgebraSignature s_u(int m, int n_minus_m);          // s(u_m + u_{n-m})
SubalgebraSignature so_so(int a, int b);                // so_a + so_b
SubalgebraSignature sp_sp(int a, int b);                // sp_a + sp_b
SubalgebraSignature u(int n);                           // u_n
}  // namespace fixed_type

}  // namespace uniton
