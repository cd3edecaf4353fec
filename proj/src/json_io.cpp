#include "uniton/json_io.hpp"

#include <cstdio>
#include <set>

namespace uniton {

namespace {

void write(const Json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += inner + Json(k).dump() + ": ";
        write(v, out, indent + 2);
      }
      out += "\n" + pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        write(j[i], out, indent + 2);
      }
      out += "\n" + pad + "]";
      return;
    }
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorKind::SchemaError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
  return j.at(key);
}

void only_keys(const Json& j, std::initializer_list<const char*> keys, const char* what) {
  if (!j.is_object()) schema(std::string(what) + " must be an object");
  std::set<std::string> allowed;
  for (const char* k : keys) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) schema(std::string("unknown key '") + k + "' in " + what);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

// Ascending coefficients, each an exact "p/q", "r/si" or "p/q+r/si" string.
Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) schema("polynomial must be an array of coefficient strings");
  std::vector<GaussianRational> c;
  for (const Json& v : j) {
    if (v.is_number_integer()) {
      c.emplace_back(Rational(v.get<long>()), Rational(0));
      continue;
    }
    if (!v.is_string()) schema("coefficients must be \"p/q+r/si\" strings");
    try {
      c.push_back(GaussianRational::parse(v.get<std::string>()));
    } catch (const Error&) {
      schema("bad coefficient '" + v.get<std::string>() + "'");
    }
  }
  return Poly(std::move(c));
}

Json complex_to_json(Complex c) { return Json{{"re", c.real()}, {"im", c.imag()}}; }

Complex complex_from_json(const Json& j) {
  only_keys(j, {"re", "im"}, "complex scalar");
  const Json& re = field(j, "re");
  const Json& im = field(j, "im");
  if (!re.is_number() || !im.is_number()) schema("complex parts must be numbers");
  return {re.get<double>(), im.get<double>()};
}

template <class T, class Fn>
Json matrix_to_json(const Matrix<T>& m, Fn&& scalar) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T, class Fn>
Matrix<T> matrix_from_json(const Json& j, int n, Fn&& scalar) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) schema("matrix must have n rows");
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) schema("matrix rows must have n entries");
    for (int k = 0; k < n; ++k) m(i, k) = scalar(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

template <class T, class Fn>
Json loop_to_json(const LoopMat<T>& l, Fn&& scalar) {
  Json coeffs = Json::array();
  for (const auto& c : l.coeffs()) coeffs.push_back(matrix_to_json(c, scalar));
  return Json{{"n", l.n()}, {"lo", l.lo()}, {"coeffs", coeffs}};
}

template <class T, class Fn>
LoopMat<T> loop_from_json(const Json& j, Fn&& scalar) {
  only_keys(j, {"n", "lo", "coeffs"}, "loop");
  const int n = int_field(j, "n");
  if (n < 1) schema("loop size must be positive");
  const int lo = int_field(j, "lo");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) schema("coeffs must be an array");
  std::vector<Matrix<T>> coeffs;
  for (const auto& c : cs) coeffs.push_back(matrix_from_json<T>(c, n, scalar));
  return LoopMat<T>(n, lo, std::move(coeffs));
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

Json to_json(const RatFun& f) { return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

RatFun ratfun_from_json(const Json& j) {
  only_keys(j, {"num", "den"}, "rational function");
  Poly den = poly_from_json(field(j, "den"));
  if (den.is_zero()) schema("rational function with zero denominator");
  return RatFun(poly_from_json(field(j, "num")), std::move(den));
}

Json to_json(const Matrix<Complex>& m) { return matrix_to_json(m, complex_to_json); }

Json to_json(const ExactLoop& l) {
  return loop_to_json(l, [](const RatFun& f) { return to_json(f); });
}

Json to_json(const NumericLoop& l) { return loop_to_json(l, complex_to_json); }

bool is_exact_loop_json(const Json& j) {
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array() || cs.empty()) return true;
  const Json& first = cs[0];
  if (!first.is_array() || first.empty() || !first[0].is_array() || first[0].empty()) schema("malformed loop coefficients");
  return first[0][0].is_object() && first[0][0].contains("num");
}

ExactLoop exact_loop_from_json(const Json& j) { return loop_from_json<RatFun>(j, ratfun_from_json); }

NumericLoop numeric_loop_from_json(const Json& j) { return loop_from_json<Complex>(j, complex_from_json); }

Json to_json(const ExtendedSolutionSpec& spec) {
  Json slots = Json::object();
  for (const auto& [key, block] : spec.slots)
    for (int a = 0; a < spec.n; ++a)
      for (int b = 0; b < spec.n; ++b)
        if (!block(a, b).is_zero()) slots[slot_entry_name(key.first, key.second, a, b)] = to_json(block(a, b));
  return Json{{"n", spec.n}, {"exponents", spec.exponents}, {"even_only", spec.even_only}, {"slots", slots}};
}

ExtendedSolutionSpec spec_from_json(const Json& j) {
  only_keys(j, {"n", "exponents", "even_only", "slots"}, "solution spec");
  ExtendedSolutionSpec spec;
  spec.n = int_field(j, "n");
  const Json& ex = field(j, "exponents");
  if (!ex.is_array()) schema("exponents must be an array");
  for (const auto& e : ex) {
    if (!e.is_number_integer()) schema("exponents must be integers");
    spec.exponents.push_back(e.get<int>());
  }
  try {
    validate_exponents(spec.n, spec.exponents);
  } catch (const Error& e) {
    schema(e.what());
  }
  if (j.contains("even_only")) {
    if (!j.at("even_only").is_boolean()) schema("even_only must be a boolean");
    spec.even_only = j.at("even_only").get<bool>();
  }
  const Json& slots = field(j, "slots");
  if (!slots.is_object()) schema("slots must be an object");
  for (const auto& [name, value] : slots.items()) {
    int i, g, a, b;
    parse_slot_entry_name(name, i, g, a, b);
    if (a >= spec.n || b >= spec.n) schema("slot entry out of range: " + name);
    if (spec.grade(a, b) != g) schema("entry " + name + " does not have grade " + std::to_string(g));
    if (spec.even_only && i % 2 != 0) schema("odd lambda power in an even spec: " + name);
    RatFun f = ratfun_from_json(value);
    if (f.is_zero()) continue;
    spec.slots.try_emplace({i, g}, spec.n, spec.n).first->second(a, b) = std::move(f);
  }
  return spec;
}

std::map<std::string, RatFun> free_functions_from_json(const Json& j) {
  if (!j.is_object()) schema("free-function file must be an object of slot entries");
  std::map<std::string, RatFun> out;
  for (const auto& [name, value] : j.items()) {
    int i, g, a, b;
    parse_slot_entry_name(name, i, g, a, b);
    out[name] = ratfun_from_json(value);
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e{{"name", c.name}, {"pass", c.pass}, {"evidence", c.evidence}};
    if (c.residual) e["residual"] = *c.residual;
    checks.push_back(std::move(e));
  }
  return Json{{"context", r.context}, {"pass", r.all_pass()}, {"checks", checks}};
}

Json to_json(const UnitonNumberReport& r) {
  return Json{{"ad_width", r.ad_width},
              {"height", r.height},
              {"canonical_bound", r.canonical_bound},
              {"group_bound", r.group_bound},
              {"width_equals_height", r.width_equals_height},
              {"within_group_bound", r.within_group_bound}};
}

Json to_json(const IwasawaFactors& f) {
  return Json{{"unitary_part", to_json(f.unitary_part)},
              {"plus_part", to_json(f.plus_part)},
              {"residual_unitarity", f.residual_unitarity},
              {"residual_split", f.residual_split},
              {"truncation_order", f.truncation_order}};
}

Json to_json(const WeierstrassData& w) {
  return Json{{"V", matrix_to_json(w.V, [](const RatFun& f) { return to_json(f); })}};
}

}  // namespace uniton
