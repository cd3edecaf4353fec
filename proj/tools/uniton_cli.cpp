// uniton: command-line driver for the extended-solution toolkit.
//
// Exit status: 0 on success or passing verification, 1 when a verification
// check fails, 2 on malformed input or a library error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "uniton/bruhat.hpp"
#include "uniton/json_io.hpp"
#include "uniton/loop_factor.hpp"
#include "uniton/verify.hpp"

using namespace uniton;

namespace {

constexpr double kHarmonicTol = 1e-5;

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::SchemaError, "cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = dump_json(j);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorKind::SchemaError, "cannot write " + out_path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SchemaError, "expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SchemaError, "expected a comma-separated number list, got '" + s + "'");
    }
  }
  return out;
}

Complex parse_z(const std::string& s) {
  const auto v = parse_double_list(s);
  if (v.size() != 2) throw Error(ErrorKind::SchemaError, "z must be given as RE,IM");
  return {v[0], v[1]};
}

// Spec files carry "slots"; loop files carry "coeffs".
struct Input {
  std::optional<ExtendedSolutionSpec> spec;
  ExactLoop loop;
};

Input load(const std::string& path) {
  const Json j = parse_json(read_input(path));
  Input in;
  if (j.is_object() && j.contains("slots")) {
    in.spec = spec_from_json(j);
    in.loop = assemble_loop(*in.spec);
  } else if (j.is_object() && j.contains("coeffs")) {
    if (!is_exact_loop_json(j)) throw Error(ErrorKind::ExactKindUnsupported, "this command needs an exact loop");
    in.loop = exact_loop_from_json(j);
  } else {
    throw Error(ErrorKind::SchemaError, "expected a solution spec or a loop");
  }
  return in;
}

ExtendedSolutionSpec load_spec(const std::string& path) {
  Input in = load(path);
  if (!in.spec) throw Error(ErrorKind::SchemaError, "this command needs a solution spec");
  return *in.spec;
}

const char* family_name(char type) {
  switch (type) {
    case 'A': return "SU_n";
    case 'B': return "SO_{2n+1}";
    case 'C': return "Sp_n";
    case 'D': return "SO_{2n}";
    default: return "";
  }
}

int family_formula(char type, int rank) {
  switch (type) {
    case 'A': return rank;            // n - 1 with n = rank + 1
    case 'B': return 2 * rank - 1;
    case 'C': return 2 * rank - 1;
    case 'D': return 2 * rank - 3;
    default: return -1;
  }
}

Json group_tables() {
  Json rows = Json::array();
  bool all = true;
  for (char t : {'A', 'B', 'C', 'D'}) {
    Json entries = Json::array();
    const int first = t == 'A' ? 1 : (t == 'D' ? 3 : 2);
    for (int l = first; l <= 7 + (t == 'A' ? 0 : 1); ++l) {
      const int r = group_max_uniton(build_root_system(t, l));
      const int n = t == 'A' ? l + 1 : l;
      const bool ok = r == family_formula(t, l);
      all = all && ok;
      entries.push_back(Json{{"n", n}, {"root_type", std::string(1, t) + std::to_string(l)}, {"r", r}, {"matches", ok}});
    }
    rows.push_back(Json{{"group", family_name(t)}, {"entries", entries}});
  }
  for (auto [t, l] : std::vector<std::pair<char, int>>{{'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}}) {
    const int r = group_max_uniton(build_root_system(t, l));
    rows.push_back(Json{{"group", std::string(1, t) + "_" + std::to_string(l)}, {"r", r}});
  }
  return Json{{"rows", rows}, {"formulas_match", all}};
}

Json symmetric_table(const RootSystem& rs) {
  const auto survey = symmetric_space_survey(rs);
  Json records = Json::array();
  Json spaces = Json::array();
  std::vector<std::string> seen;
  for (const auto& rec : survey) {
    records.push_back(Json{{"marks", rec.xi.marks}, {"fixed", rec.fixed.to_string()}, {"height", rec.height}});
    const std::string sig = rec.fixed.to_string();
    if (std::find(seen.begin(), seen.end(), sig) != seen.end()) continue;
    seen.push_back(sig);
    spaces.push_back(Json{{"fixed", sig}, {"r_N", r_of_N(survey, rec.fixed)}});
  }
  return Json{{"type", std::string(1, rs.type)}, {"rank", rs.rank}, {"spaces", spaces}, {"records", records}};
}

// Aggregated checks for a spec: extended-solution conditions, uniton number,
// harmonicity of the extracted map and, where applicable, super-horizontality
// and T-invariance.
VerificationReport verify_spec(const ExtendedSolutionSpec& spec, int grid, double h) {
  VerificationReport rep = check_extended(spec);
  const UnitonNumberReport un = uniton_number_report(spec);
  const bool width_ok = un.within_group_bound && (!spec.is_chart_form() || un.width_equals_height);
  rep.checks.push_back({"uniton number", width_ok,
                        "ad_width " + std::to_string(un.ad_width) + ", height " + std::to_string(un.height) +
                            ", bound " + std::to_string(un.group_bound),
                        std::nullopt});
  if (spec.is_s1_invariant()) {
    const auto sh = check_superhorizontal(spec);
    rep.checks.insert(rep.checks.end(), sh.checks.begin(), sh.checks.end());
  }
  const ExactLoop psi = assemble_loop(spec);
  if (spec.even_only) {
    for (auto c : check_T_invariant(based(psi)).checks) {
      c.name = "exact " + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  try {
    const double r = harmonicity_residual([&](Complex z) { return harmonic_map_at(psi, z); }, disc_grid(grid), h);
    rep.checks.push_back({"harmonic", r <= kHarmonicTol, "max divergence-form residual on the grid", r});
  } catch (const Error& e) {
    rep.checks.push_back({"harmonic", false, e.what(), std::nullopt});
  }
  return rep;
}

Json matrix_record(const Matrix<Complex>& m) { return to_json(m); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic maps into U_n and Grassmannians via algebraic loops"};
  app.require_subcommand(1);

  std::string out_path;

  auto* tables = app.add_subcommand("tables", "Uniton-number tables");
  tables->require_subcommand(1);
  auto* groups = tables->add_subcommand("groups", "r(G) for the compact simple groups");
  std::string g_type;
  int g_rank = 0;
  groups->add_option("--type", g_type, "Root type A-G (single group)");
  groups->add_option("--rank", g_rank, "Rank (single group)");
  auto* symmetric = tables->add_subcommand("symmetric", "Inner symmetric spaces and r(N) for one root system");
  std::string s_type;
  int s_rank = 0;
  symmetric->add_option("--type", s_type, "Root type A-G")->required();
  symmetric->add_option("--rank", s_rank, "Rank")->required();

  auto* build = app.add_subcommand("build", "Build an extended solution from free holomorphic data");
  int b_n = 0;
  std::string b_exponents, b_free;
  bool b_even = false;
  build->add_option("--n", b_n, "Matrix size")->required();
  build->add_option("--exponents", b_exponents, "Non-increasing exponents ending in 0, e.g. 3,2,1,0")->required();
  build->add_option("--free", b_free, "JSON file of free slot entries (missing entries are zero)");
  build->add_flag("--even", b_even, "Only even lambda powers (Grassmannian build)");
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* demo = app.add_subcommand("demo", "Built-in examples");
  demo->require_subcommand(1);
  auto* veronese = demo->add_subcommand("veronese", "Full-flag solution of the rational normal curve");
  int v_n = 0;
  veronese->add_option("--n", v_n, "Matrix size")->required()->check(CLI::Range(1, 12));
  veronese->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Verify a solution spec");
  std::string in_path = "-";
  int grid = 5;
  double h = 1e-3;
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("file", in_path, "Spec file or - for stdin");
  verify->add_option("--grid", grid, "Grid points per side on [-0.7,0.7]^2")->check(CLI::Range(1, 50));
  verify->add_option("--h", h, "Finite-difference step")->check(CLI::PositiveNumber);

  std::string z_text = "0.3,0.2";
  auto* map = app.add_subcommand("map", "Harmonic map value phi(z)");
  map->add_option("file", in_path, "Spec or loop file, or - for stdin");
  map->add_option("--z", z_text, "Point RE,IM");

  auto* flow = app.add_subcommand("flow", "C* flow: energy and distance to the limit");
  std::string t_text = "0,0.5,1,1.5,2,2.5,3,3.5,4,4.5,5,5.5,6";
  flow->add_option("file", in_path, "Spec file or - for stdin");
  flow->add_option("--z", z_text, "Point RE,IM");
  flow->add_option("--t", t_text, "Comma-separated flow times");

  auto* factor = app.add_subcommand("factor", "Uniton factorization at a point");
  factor->add_option("file", in_path, "Spec file or - for stdin");
  factor->add_option("--z", z_text, "Point RE,IM");

  auto* cell = app.add_subcommand("cell", "Bruhat cell of an exact loop");
  cell->add_option("file", in_path, "Loop or spec file, or - for stdin");

  auto* big_cell = app.add_subcommand("big-cell", "Weierstrass data V of a big-cell spec");
  big_cell->add_option("file", in_path, "Spec file or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*groups) {
      if (g_type.empty()) {
        emit(group_tables(), out_path);
      } else {
        if (g_type.size() != 1) throw Error(ErrorKind::InvalidType, "root type must be one letter");
        const RootSystem rs = build_root_system(g_type[0], g_rank);
        emit(Json{{"type", g_type}, {"rank", g_rank}, {"r", group_max_uniton(rs)}}, out_path);
      }
      return 0;
    }
    if (*symmetric) {
      if (s_type.size() != 1) throw Error(ErrorKind::InvalidType, "root type must be one letter");
      emit(symmetric_table(build_root_system(s_type[0], s_rank)), out_path);
      return 0;
    }
    if (*build) {
      std::map<std::string, RatFun> free;
      if (!b_free.empty()) free = free_functions_from_json(parse_json(read_input(b_free)));
      const auto ex = parse_int_list(b_exponents);
      const auto spec = b_even ? even_grassmannian_build(b_n, ex, free) : build_from_free_functions(b_n, ex, free);
      emit(to_json(spec), out_path);
      return 0;
    }
    if (*veronese) {
      emit(to_json(veronese_solution(v_n)), out_path);
      return 0;
    }
    if (*verify) {
      const auto rep = verify_spec(load_spec(in_path), grid, h);
      emit(to_json(rep), out_path);
      return rep.all_pass() ? 0 : 1;
    }
    if (*map) {
      const Complex z = parse_z(z_text);
      const Input in = load(in_path);
      const IwasawaFactors f = unitarize(substitute_z(in.loop, z));
      emit(Json{{"z", {z.real(), z.imag()}},
                {"phi", matrix_record(evaluate(f.unitary_part, Complex(-1.0)))},
                {"residual_unitarity", f.residual_unitarity},
                {"residual_split", f.residual_split}},
           out_path);
      return 0;
    }
    if (*flow) {
      const Complex z = parse_z(z_text);
      const auto spec = load_spec(in_path);
      const ExactLoop psi = assemble_loop(spec);
      const NumericLoop limit = unitarize(substitute_z(assemble_loop(flow_limit(spec)), z)).unitary_part;
      Json rows = Json::array();
      double prev = std::numeric_limits<double>::quiet_NaN();
      bool non_increasing = true, non_decreasing = true;
      for (double t : parse_double_list(t_text)) {
        const NumericLoop u = cstar_flow(psi, t, z);
        const double e = energy(u);
        if (!std::isnan(prev)) {
          non_increasing = non_increasing && e <= prev * (1 + 1e-9) + 1e-12;
          non_decreasing = non_decreasing && e >= prev * (1 - 1e-9) - 1e-12;
        }
        prev = e;
        rows.push_back(Json{{"t", t}, {"energy", e}, {"distance_to_limit", max_coeff_distance(u, limit)}});
      }
      emit(Json{{"z", {z.real(), z.imag()}}, {"energy_non_increasing", non_increasing}, {"energy_non_decreasing", non_decreasing}, {"samples", rows}}, out_path);
      return 0;
    }
    if (*factor) {
      const Complex z = parse_z(z_text);
      const auto factors = uniton_factorize(load_spec(in_path), z);
      Json arr = Json::array();
      for (const auto& f : factors) arr.push_back(Json{{"loop", to_json(f)}, {"projection_residual", projection_factor_residual(f)}});
      emit(Json{{"z", {z.real(), z.imag()}}, {"factors", arr}}, out_path);
      return 0;
    }
    if (*cell) {
      emit(Json{{"exponents", bruhat_cell(load(in_path).loop).exponents}}, out_path);
      return 0;
    }
    if (*big_cell) {
      emit(to_json(big_cell_check(load_spec(in_path))), out_path);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << dump_json(Json{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}});
    return 2;
  } catch (const std::exception& e) {
    std::cerr << dump_json(Json{{"error", "Internal"}, {"message", e.what()}});
    return 2;
  }
  return 2;
}
