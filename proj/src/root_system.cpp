#include "uniton/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "uniton/errors.hpp"

namespace uniton {

namespace {

IntMatrix zeros(int l) { return IntMatrix(static_cast<std::size_t>(l), std::vector<int>(static_cast<std::size_t>(l), 0)); }

void link(IntMatrix& g, int i, int j, int v) {
  g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
  g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
}

// Simple-root Gram matrices in Bourbaki numbering (0-based here).
IntMatrix bourbaki_gram(char type, int l) {
  IntMatrix g = zeros(l);
  auto diag = [&](int i, int v) { g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v; };
  switch (type) {
    case 'A':
      for (int i = 0; i < l; ++i) diag(i, 2);
      for (int i = 0; i + 1 < l; ++i) link(g, i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < l; ++i) diag(i, i + 1 < l ? 4 : 2);
      for (int i = 0; i + 1 < l; ++i) link(g, i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < l; ++i) diag(i, i + 1 < l ? 2 : 4);
      for (int i = 0; i + 2 < l; ++i) link(g, i, i + 1, -1);
      link(g, l - 2, l - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < l; ++i) diag(i, 2);
      for (int i = 0; i + 2 < l; ++i) link(g, i, i + 1, -1);
      link(g, l - 3, l - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < l; ++i) diag(i, 2);
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (int i = 2; i + 1 < l; ++i) link(g, i, i + 1, -1);
      break;
    case 'F':
      diag(0, 4);
      diag(1, 4);
      diag(2, 2);
      diag(3, 2);
      link(g, 0, 1, -2);
      link(g, 1, 2, -2);
      link(g, 2, 3, -1);
      break;
    case 'G':
      diag(0, 2);
      diag(1, 6);
      link(g, 0, 1, -3);
      break;
    default:
      break;
  }
  return g;
}

bool valid_type(char type, int l) {
  switch (type) {
    case 'A': return l >= 1;
    case 'B': return l >= 2;
    case 'C': return l >= 2;
    case 'D': return l >= 3;
    case 'E': return l >= 6 && l <= 8;
    case 'F': return l == 4;
    case 'G': return l == 2;
    default: return false;
  }
}

int height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

int inner(const IntMatrix& gram, const RootVector& a, const RootVector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * gram[i][j] * b[j];
  return s;
}

}  // namespace

bool CanonicalElement::is_canonical() const {
  return std::all_of(marks.begin(), marks.end(), [](int m) { return m == 0 || m == 1; });
}

std::vector<RootVector> positive_roots_from_gram(const IntMatrix& gram) {
  const int l = static_cast<int>(gram.size());
  std::set<RootVector> known;
  std::vector<RootVector> layer;
  for (int i = 0; i < l; ++i) {
    RootVector e(static_cast<std::size_t>(l), 0);
    e[static_cast<std::size_t>(i)] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<RootVector> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<RootVector> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < l; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        int pairing = 0;
        for (int j = 0; j < l; ++j) pairing += beta[static_cast<std::size_t>(j)] * gram[static_cast<std::size_t>(j)][ui];
        pairing = 2 * pairing / gram[ui][ui];
        // p: how far the alpha_i-string extends downwards from beta.
        int p = 0;
        RootVector down = beta;
        while (down[ui] > 0) {
          --down[ui];
          if (!known.count(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[ui];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& r : layer) known.insert(r);
  }
  return all;
}

RootSystem build_root_system(char type, int rank) {
  if (!valid_type(type, rank))
    throw Error(ErrorKind::InvalidType, std::string("no simple root system of type ") + type + std::to_string(rank));
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.gram = bourbaki_gram(type, rank);
  rs.cartan = zeros(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      rs.cartan[ui][uj] = 2 * rs.gram[ui][uj] / rs.gram[uj][uj];
    }
  rs.positive_roots = positive_roots_from_gram(rs.gram);
  rs.highest_root = rs.positive_roots.back();
  return rs;
}

int root_value(const RootVector& root, const CanonicalElement& xi) {
  if (root.size() != xi.marks.size()) throw Error(ErrorKind::SizeMismatch, "marks do not match the rank");
  int s = 0;
  for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * xi.marks[i];
  return s;
}

int height_of(const RootSystem& rs, const CanonicalElement& xi) {
  int h = 0;
  for (const auto& r : rs.positive_roots) h = std::max(h, root_value(r, xi));
  return h;
}

int group_max_uniton(const RootSystem& rs) { return height(rs.highest_root); }

std::map<int, int> grading(const RootSystem& rs, const CanonicalElement& xi) {
  std::map<int, int> dims;
  dims[0] = rs.rank;
  for (const auto& r : rs.positive_roots) {
    const int v = root_value(r, xi);
    if (v == 0) {
      dims[0] += 2;
    } else {
      ++dims[v];
      ++dims[-v];
    }
  }
  return dims;
}

int morse_index(const RootSystem& rs, const CanonicalElement& xi) {
  int s = 0;
  for (const auto& r : rs.positive_roots) {
    const int v = root_value(r, xi);
    if (v != 0) s += v - 1;
  }
  return s;
}

int big_cell_fiber_dim(const RootSystem& rs, const CanonicalElement& xi) {
  const auto dims = grading(rs, xi);
  const int r = height_of(rs, xi);
  int s = 0;
  for (int i = 0; i < r; ++i)
    for (const auto& [j, d] : dims)
      if (j > i) s += d;
  return s;
}

int free_function_count(const RootSystem& rs, const CanonicalElement& xi) {
  int s = 0;
  for (const auto& [j, d] : grading(rs, xi))
    if (j > 0) s += d;
  return s;
}

CanonicalElement canonical_reduce(const RootSystem& rs, const CanonicalElement& xi) {
  if (static_cast<int>(xi.marks.size()) != rs.rank) throw Error(ErrorKind::SizeMismatch, "marks do not match the rank");
  CanonicalElement out = xi;
  for (auto& m : out.marks) m = m > 0 ? 1 : 0;
  return out;
}

CanonicalElement odd_canonical_reduce(const RootSystem& rs, const CanonicalElement& xi) {
  if (static_cast<int>(xi.marks.size()) != rs.rank) throw Error(ErrorKind::SizeMismatch, "marks do not match the rank");
  CanonicalElement out = xi;
  for (auto& m : out.marks) m = ((m % 2) + 2) % 2;
  return out;
}

std::string SubalgebraSignature::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size(); ++i) os << (i ? "+" : "") << components[i];
  if (center_dim > 0) os << (components.empty() ? "" : "+") << "T" << center_dim;
  if (components.empty() && center_dim == 0) os << "0";
  return os.str();
}

std::string classify_simple_component(const IntMatrix& gram) {
  const int k = static_cast<int>(gram.size());
  const int n = static_cast<int>(positive_roots_from_gram(gram).size());
  int longest = 0;
  for (int i = 0; i < k; ++i) longest = std::max(longest, gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  int long_count = 0;
  bool laced = true;
  for (int i = 0; i < k; ++i) {
    const int d = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    if (d == longest) ++long_count;
    if (d != gram[0][0]) laced = false;
  }
  const std::string ks = std::to_string(k);
  if (laced) {
    if (n == k * (k + 1) / 2) return "A" + ks;
    if (k >= 4 && n == k * (k - 1)) return "D" + ks;
    if ((k == 6 && n == 36) || (k == 7 && n == 63) || (k == 8 && n == 120)) return "E" + ks;
  } else {
    if (k == 2 && n == 6) return "G2";
    if (k == 4 && n == 24) return "F4";
    if (n == k * k) {
      if (k == 2) return "B2";
      if (long_count == k - 1) return "B" + ks;
      if (long_count == 1) return "C" + ks;
    }
  }
  throw Error(ErrorKind::UnrecognizedSubsystem,
              "unrecognized simple component of rank " + ks + " with " + std::to_string(n) + " positive roots");
}

namespace {

SubalgebraSignature even_subalgebra(const RootSystem& rs, const CanonicalElement& xi) {
  std::vector<RootVector> even;
  for (const auto& r : rs.positive_roots)
    if (root_value(r, xi) % 2 == 0) even.push_back(r);
  std::set<RootVector> even_set(even.begin(), even.end());

  // Simple roots of the subsystem: even positive roots that are not a sum of two.
  std::vector<RootVector> simple;
  for (const auto& r : even) {
    bool decomposable = false;
    for (const auto& a : even) {
      RootVector b(r.size());
      bool nonneg = true;
      for (std::size_t i = 0; i < r.size(); ++i) {
        b[i] = r[i] - a[i];
        if (b[i] < 0) nonneg = false;
      }
      if (nonneg && height(b) > 0 && even_set.count(b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }

  const int k = static_cast<int>(simple.size());
  std::vector<int> comp(static_cast<std::size_t>(k), -1);
  int ncomp = 0;
  for (int s = 0; s < k; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = ncomp;
    while (!stack.empty()) {
      const int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < k; ++b)
        if (comp[static_cast<std::size_t>(b)] < 0 &&
            inner(rs.gram, simple[static_cast<std::size_t>(a)], simple[static_cast<std::size_t>(b)]) != 0) {
          comp[static_cast<std::size_t>(b)] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }

  SubalgebraSignature sig;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> members;
    for (int s = 0; s < k; ++s)
      if (comp[static_cast<std::size_t>(s)] == c) members.push_back(s);
    IntMatrix g = zeros(static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        g[i][j] = inner(rs.gram, simple[static_cast<std::size_t>(members[i])], simple[static_cast<std::size_t>(members[j])]);
    sig.components.push_back(classify_simple_component(g));
  }
  std::sort(sig.components.begin(), sig.components.end());
  sig.center_dim = rs.rank - k;
  return sig;
}

}  // namespace

std::vector<SymmetricSpaceRecord> symmetric_space_survey(const RootSystem& rs) {
  std::vector<SymmetricSpaceRecord> out;
  for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
    CanonicalElement xi;
    for (int i = 0; i < rs.rank; ++i) xi.marks.push_back((mask >> i) & 1u);
    out.push_back({xi, even_subalgebra(rs, xi), height_of(rs, xi)});
  }
  return out;
}

int r_of_N(const std::vector<SymmetricSpaceRecord>& survey, const SubalgebraSignature& k) {
  int best = -1;
  for (const auto& rec : survey)
    if (rec.fixed == k) best = std::max(best, rec.height);
  return best;
}

namespace fixed_type {

namespace {

void add_su(SubalgebraSignature& s, int m) {
  if (m >= 2) s.components.push_back("A" + std::to_string(m - 1));
}

void add_so(SubalgebraSignature& s, int m) {
  switch (m) {
    case 0:
    case 1: break;
    case 2: ++s.center_dim; break;
    case 3: s.components.push_back("A1"); break;
    case 4:
      s.components.push_back("A1");
      s.components.push_back("A1");
      break;
    case 5: s.components.push_back("B2"); break;
    case 6: s.components.push_back("A3"); break;
    default: s.components.push_back((m % 2 ? "B" : "D") + std::to_string(m / 2)); break;
  }
}

void add_sp(SubalgebraSignature& s, int m) {
  if (m == 1) s.components.push_back("A1");
  else if (m == 2) s.components.push_back("B2");
  else if (m >= 3) s.components.push_back("C" + std::to_string(m));
}

SubalgebraSignature sorted(SubalgebraSignature s) {
  std::sort(s.components.begin(), s.components.end());
  return s;
}

}  // namespace

SubalgebraSignature s_u(int m, int n_minus_m) {
  SubalgebraSignature s;
  add_su(s, m);
  add_su(s, n_minus_m);
  s.center_dim = 1;
  return sorted(s);
}

SubalgebraSignature so_so(int a, int b) {
  SubalgebraSignature s;
  add_so(s, a);
  add_so(s, b);
  return sorted(s);
}

SubalgebraSignature sp_sp(int a, int b) {
  SubalgebraSignature s;
  add_sp(s, a);
  add_sp(s, b);
  return sorted(s);
}

SubalgebraSignature u(int n) {
  SubalgebraSignature s;
  add_su(s, n);
  s.center_dim = 1;
  return sorted(s);
}

}  // namespace fixed_type

}  // namespace uniton
