#include "uniton/weierstrass.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace uniton {

namespace {

template <class Fn>
Matrix<RatFun> map_entries(const Matrix<RatFun>& m, Fn&& f) {
  Matrix<RatFun> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
  return r;
}

RatFun inverse_factorial(int k) {
  mpq_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return RatFun(GaussianRational(mpq_class(1 / f), 0));
}

}  // namespace

bool ExtendedSolutionSpec::is_chart_form() const {
  for (const auto& [key, block] : slots)
    if (!(0 <= key.first && key.first < key.second)) return false;
  return true;
}

bool ExtendedSolutionSpec::is_s1_invariant() const {
  for (const auto& [key, block] : slots)
    if (key.first != 0 && !block.is_zero()) return false;
  return true;
}

ExactLoop ExtendedSolutionSpec::C() const {
  ExactLoop c(n);
  for (const auto& [key, block] : slots) c += ExactLoop(n, key.first, {block});
  return c;
}

void validate_exponents(int n, const std::vector<int>& exponents) {
  if (n < 1 || static_cast<int>(exponents.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "exponent vector must have n entries");
  for (int a = 0; a + 1 < n; ++a)
    if (exponents[static_cast<std::size_t>(a)] < exponents[static_cast<std::size_t>(a + 1)])
      throw Error(ErrorKind::InvalidArgument, "exponents must be non-increasing");
  if (exponents.back() != 0) throw Error(ErrorKind::InvalidArgument, "last exponent must be 0");
}

std::map<SlotKey, Matrix<RatFun>> split_slots(const ExactLoop& C, const std::vector<int>& exponents) {
  const int n = C.n();
  std::map<SlotKey, Matrix<RatFun>> slots;
  if (C.is_zero()) return slots;
  if (C.lo() < 0) throw Error(ErrorKind::InvalidArgument, "C has negative lambda powers");
  for (int p = C.lo(); p <= C.hi(); ++p) {
    const Matrix<RatFun> m = C.coeff(p);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (m(a, b).is_zero()) continue;
        const int g = exponents[static_cast<std::size_t>(a)] - exponents[static_cast<std::size_t>(b)];
        auto it = slots.try_emplace({p, g}, n, n).first;
        it->second(a, b) = m(a, b);
      }
  }
  return slots;
}

std::string slot_entry_name(int i, int j, int a, int b) {
  return "c" + std::to_string(j) + "_" + std::to_string(i) + "[" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "]";
}

void parse_slot_entry_name(const std::string& name, int& i, int& j, int& a, int& b) {
  static const std::regex re(R"(c(-?\d+)_(\d+)\[(\d+),(\d+)\])");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw Error(ErrorKind::SchemaError, "malformed slot name '" + name + "'");
  j = std::stoi(m[1]);
  i = std::stoi(m[2]);
  a = std::stoi(m[3]) - 1;
  b = std::stoi(m[4]) - 1;
  if (a < 0 || b < 0) throw Error(ErrorKind::SchemaError, "slot indices are 1-based in '" + name + "'");
}

std::vector<std::string> free_slot_names(int n, const std::vector<int>& exponents, bool even_only) {
  validate_exponents(n, exponents);
  const int r = exponents.front();
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) {
    if (even_only && i % 2 != 0) continue;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (exponents[static_cast<std::size_t>(a)] - exponents[static_cast<std::size_t>(b)] == i + 1)
          names.push_back(slot_entry_name(i, i + 1, a, b));
  }
  return names;
}

Matrix<RatFun> exp_nilpotent(const Matrix<RatFun>& N) {
  const int n = N.rows();
  Matrix<RatFun> sum = Matrix<RatFun>::identity(n);
  Matrix<RatFun> power = Matrix<RatFun>::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * N;
    if (power.is_zero()) return sum;
    if (k == n) break;
    sum += power.scaled(inverse_factorial(k));
  }
  throw Error(ErrorKind::NotNilpotent, "matrix is not nilpotent");
}

ExactLoop exp_nilpotent(const ExactLoop& N) {
  const int n = N.n();
  ExactLoop sum = ExactLoop::identity(n);
  ExactLoop power = ExactLoop::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * N;
    if (power.is_zero()) return sum;
    if (k == n) break;
    sum += power.scaled(inverse_factorial(k));
  }
  throw Error(ErrorKind::NotNilpotent, "loop is not nilpotent");
}

Matrix<RatFun> log_unipotent(const Matrix<RatFun>& U) {
  const int n = U.rows();
  const Matrix<RatFun> X = U - Matrix<RatFun>::identity(n);
  Matrix<RatFun> sum(n, n);
  Matrix<RatFun> power = Matrix<RatFun>::identity(n);
  for (int k = 1; k <= n; ++k) {
    power = power * X;
    if (power.is_zero()) return sum;
    if (k == n) break;
    RatFun c(GaussianRational(mpq_class(k % 2 ? 1 : -1) / k, 0));
    sum += power.scaled(c);
  }
  throw Error(ErrorKind::NotNilpotent, "matrix is not unipotent");
}

ExactLoop left_log_derivative(const ExactLoop& C) {
  const int n = C.n();
  ExactLoop term = C.map_coeffs([](const Matrix<RatFun>& m) { return map_entries(m, differentiate); });
  ExactLoop sum = term;
  mpq_class coeff = 1;
  for (int k = 1; !term.is_zero(); ++k) {
    if (k > 2 * n) throw Error(ErrorKind::NotNilpotent, "ad C is not nilpotent");
    term = C * term - term * C;
    coeff = -coeff / (k + 1);
    sum += term.scaled(RatFun(GaussianRational(coeff, 0)));
  }
  return sum;
}

namespace {

ExtendedSolutionSpec solve_constrained(ExtendedSolutionSpec spec) {
  const int n = spec.n;
  const int r = spec.height();
  for (int i = 0; i < r; ++i) {
    if (spec.even_only && i % 2 != 0) continue;
    for (int j = i + 2; j <= r; ++j) {
      spec.slots.erase({i, j});
      const Matrix<RatFun> lld = left_log_derivative(spec.C()).coeff(i);
      Matrix<RatFun> block(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (spec.grade(a, b) != j || lld(a, b).is_zero()) continue;
          try {
            block(a, b) = -integrate_rational(lld(a, b));
          } catch (const NonRationalAntiderivativeError& e) {
            throw NonRationalAntiderivativeError(e.log_part(), e.pole(), "slot " + slot_entry_name(i, j, a, b));
          }
        }
      if (!block.is_zero()) spec.slots[{i, j}] = block;
    }
  }
  return spec;
}

}  // namespace

ExtendedSolutionSpec build_from_free_functions(int n, const std::vector<int>& exponents,
                                               const std::map<std::string, RatFun>& free, bool even_only) {
  validate_exponents(n, exponents);
  ExtendedSolutionSpec spec;
  spec.n = n;
  spec.exponents = exponents;
  spec.even_only = even_only;
  const auto names = free_slot_names(n, exponents, false);
  const std::set<std::string> allowed(names.begin(), names.end());
  for (const auto& [name, value] : free) {
    if (!allowed.count(name)) {
      std::string list;
      for (const auto& a : names) list += (list.empty() ? "" : ", ") + a;
      throw Error(ErrorKind::InvalidArgument, "'" + name + "' is not a free slot entry; free slots: " + (list.empty() ? "none" : list));
    }
    int i, j, a, b;
    parse_slot_entry_name(name, i, j, a, b);
    if (value.is_zero()) continue;
    if (even_only && i % 2 != 0)
      throw Error(ErrorKind::OddSlotData, "free data at odd lambda power in '" + name + "'");
    spec.slots.try_emplace({i, j}, n, n).first->second(a, b) = value;
  }
  return solve_constrained(std::move(spec));
}

ExtendedSolutionSpec build_from_free_functions(int n, const std::vector<int>& exponents,
                                               const std::vector<RatFun>& free, bool even_only) {
  const auto names = free_slot_names(n, exponents, even_only);
  if (names.size() != free.size())
    throw Error(ErrorKind::SizeMismatch, "expected " + std::to_string(names.size()) + " free functions, got " +
                                             std::to_string(free.size()));
  std::map<std::string, RatFun> named;
  for (std::size_t k = 0; k < names.size(); ++k) named[names[k]] = free[k];
  return build_from_free_functions(n, exponents, named, even_only);
}

Matrix<RatFun> closed_form_full_flag_C0(int n, const std::vector<RatFun>& f) {
  if (static_cast<int>(f.size()) != n) throw Error(ErrorKind::SizeMismatch, "frame vector must have n components");
  // A = (f^{(n-1)}, ..., f', f).
  std::vector<std::vector<RatFun>> derivs{f};
  for (int k = 1; k < n; ++k) {
    std::vector<RatFun> d;
    for (const auto& x : derivs.back()) d.push_back(differentiate(x));
    derivs.push_back(std::move(d));
  }
  Matrix<RatFun> A(n, n);
  for (int c = 0; c < n; ++c)
    for (int row = 0; row < n; ++row) A(row, c) = derivs[static_cast<std::size_t>(n - 1 - c)][static_cast<std::size_t>(row)];

  // A = U L, eliminating from the last column backwards.
  Matrix<RatFun> U = Matrix<RatFun>::identity(n);
  Matrix<RatFun> L(n, n);
  for (int c = n - 1; c >= 0; --c) {
    for (int row = n - 1; row > c; --row) {
      RatFun v = A(row, c);
      for (int k = row + 1; k < n; ++k) v -= U(row, k) * L(k, c);
      L(row, c) = v;
    }
    std::vector<RatFun> w(static_cast<std::size_t>(c + 1));
    for (int row = 0; row <= c; ++row) {
      RatFun v = A(row, c);
      for (int k = c + 1; k < n; ++k) v -= U(row, k) * L(k, c);
      w[static_cast<std::size_t>(row)] = v;
    }
    L(c, c) = w[static_cast<std::size_t>(c)];
    if (L(c, c).is_zero()) throw Error(ErrorKind::DegenerateFrame, "frame has no UL decomposition at column " + std::to_string(c + 1));
    for (int row = 0; row < c; ++row) U(row, c) = w[static_cast<std::size_t>(row)] / L(c, c);
  }
  return U;
}

ExtendedSolutionSpec spec_from_C0(const Matrix<RatFun>& C0, const std::vector<int>& exponents) {
  ExtendedSolutionSpec spec;
  spec.n = C0.rows();
  validate_exponents(spec.n, exponents);
  spec.exponents = exponents;
  spec.slots = split_slots(ExactLoop::constant(C0), exponents);
  return spec;
}

ExactLoop gamma_loop(const std::vector<int>& exponents) { return ExactLoop::diagonal_powers(exponents); }

ExactLoop assemble_loop(const ExtendedSolutionSpec& spec) {
  return exp_nilpotent(spec.C()) * gamma_loop(spec.exponents);
}

CanonicalElement marks_of(const std::vector<int>& exponents) {
  CanonicalElement xi;
  for (std::size_t t = 0; t + 1 < exponents.size(); ++t) xi.marks.push_back(exponents[t] - exponents[t + 1]);
  return xi;
}

ExtendedSolutionSpec transform_subset(const ExtendedSolutionSpec& spec, const std::vector<int>& J) {
  if (J.empty()) throw Error(ErrorKind::EmptySubset, "transform needs a nonempty subset");
  const auto marks = marks_of(spec.exponents).marks;
  std::set<int> steps;
  for (int t : J) {
    if (t < 1 || t >= spec.n || marks[static_cast<std::size_t>(t - 1)] == 0)
      throw Error(ErrorKind::InvalidArgument, "step " + std::to_string(t) + " is not a mark of xi");
    steps.insert(t);
  }
  std::vector<int> k(static_cast<std::size_t>(spec.n), 0);
  for (int a = 0; a < spec.n; ++a)
    for (int t : steps)
      if (a < t) ++k[static_cast<std::size_t>(a)];
  ExtendedSolutionSpec out;
  out.n = spec.n;
  out.exponents = k;
  out.slots = split_slots(spec.C(), k);
  return out;
}

ExtendedSolutionSpec veronese_solution(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "Veronese solution needs n >= 2");
  std::vector<RatFun> f;
  for (int k = n - 1; k >= 0; --k)
    f.push_back(RatFun(Poly::monomial(GaussianRational(1), k)) * inverse_factorial(k));
  std::vector<int> exps;
  for (int k = n - 1; k >= 0; --k) exps.push_back(k);
  return spec_from_C0(log_unipotent(closed_form_full_flag_C0(n, f)), exps);
}

ExtendedSolutionSpec even_grassmannian_build(int n, const std::vector<int>& exponents,
                                             const std::map<std::string, RatFun>& free) {
  return build_from_free_functions(n, exponents, free, true);
}

}  // namespace uniton
