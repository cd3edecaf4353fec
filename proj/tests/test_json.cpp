#include "doctest.h"
#include "support.hpp"
#include "uniton/json_io.hpp"

using namespace uniton;

TEST_CASE("solution specs round-trip exactly") {
  std::mt19937_64 rng(71);
  for (const std::vector<int>& k : {std::vector<int>{3, 2, 1, 0}, std::vector<int>{2, 1, 1, 0}, std::vector<int>{1, 0}}) {
    const int n = static_cast<int>(k.size());
    std::vector<RatFun> free;
    for (std::size_t i = 0; i < free_slot_names(n, k).size(); ++i) free.push_back(test::random_ratfun(rng, 1) * RatFun(GaussianRational(Rational(1, 3), Rational(-2, 7))));
    ExtendedSolutionSpec spec;
    try {
      spec = build_from_free_functions(n, k, free);
    } catch (const Error&) {
      spec = build_from_free_functions(n, k, test::random_free_data(rng, static_cast<int>(free.size()), 3));
    }
    const std::string text = dump_json(to_json(spec));
    const ExtendedSolutionSpec back = spec_from_json(parse_json(text));
    CHECK(back == spec);
    CHECK(dump_json(to_json(back)) == text);
  }
  const auto v = veronese_solution(4);
  CHECK(spec_from_json(parse_json(dump_json(to_json(v)))) == v);
  const auto t = transform_subset(v, {1, 3});
  CHECK(spec_from_json(parse_json(dump_json(to_json(t)))) == t);
}

TEST_CASE("loops round-trip") {
  const ExactLoop l = exp_nilpotent(veronese_solution(3).C()) * gamma_loop({2, 1, 0});
  const Json j = to_json(l);
  CHECK(is_exact_loop_json(j));
  CHECK(exact_loop_from_json(parse_json(dump_json(j))) == l);
  const NumericLoop nl = substitute_z(l, Complex(0.1, 1.0 / 3.0));
  const Json jn = parse_json(dump_json(to_json(nl)));
  CHECK_FALSE(is_exact_loop_json(jn));
  // 17 significant digits reproduce every double.
  CHECK(max_coeff_distance(numeric_loop_from_json(jn), nl) == 0.0);
}

TEST_CASE("output is deterministic and formatted") {
  const Json j{{"b", 0.1}, {"a", {1, 2}}, {"s", "x\"y"}};
  const std::string text = dump_json(j);
  CHECK(text == "{\n  \"b\": 0.10000000000000001,\n  \"a\": [\n    1,\n    2\n  ],\n  \"s\": \"x\\\"y\"\n}\n");
  CHECK(dump_json(parse_json(text)) == text);
}

TEST_CASE("schema violations") {
  auto kind_of = [](const std::string& text, auto&& fn) {
    try {
      fn(parse_json(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  auto spec = [](const Json& j) { (void)spec_from_json(j); };
  CHECK(kind_of("{", spec) == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"n":2,"exponents":[1,0],"slots":{},"extra":1})", spec) == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"n":2,"exponents":[0,1],"slots":{}})", spec) == ErrorKind::SchemaError);
  CHECK(kind_of(R"({"n":2,"exponents":[1,0],"slots":{"c2_0[1,2]":{"num":["1/1"],"den":["1/1"]}}})", spec) ==
        ErrorKind::SchemaError);
  CHECK(kind_of(R"({"n":2,"exponents":[1,0],"slots":{"c1_0[1,2]":{"num":["x"],"den":["1/1"]}}})", spec) ==
        ErrorKind::SchemaError);
  CHECK(kind_of(R"({"num":["1/1"],"den":[]})", [](const Json& j) { (void)ratfun_from_json(j); }) ==
        ErrorKind::SchemaError);
  CHECK(kind_of(R"({"n":2,"lo":0,"coeffs":[[[1]]]})", [](const Json& j) { (void)exact_loop_from_json(j); }) == ErrorKind::SchemaError);
  const auto ok = spec_from_json(parse_json(R"({"n":2,"exponents":[1,0],"slots":{"c1_0[1,2]":{"num":["0/1", "1/1"],"den":["1/1"]}}})"));
  CHECK(ok.C().coeff(0)(0, 1) == RatFun::z());
}

TEST_CASE("free-function files") {
  const auto f = free_functions_from_json(parse_json(R"({"c1_0[1,2]":{"num":["1/2+3/1i"],"den":["1/1"]}})"));
  REQUIRE(f.size() == 1);
  CHECK(f.at("c1_0[1,2]") == RatFun(GaussianRational(Rational(1, 2), Rational(3))));
  CHECK_THROWS_AS(free_functions_from_json(parse_json(R"({"bogus":{}})")), Error);
}
