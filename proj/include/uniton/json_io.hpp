#pragma once

#include <string>

#include "json.hpp"
#include "uniton/root_system.hpp"
#include "uniton/verify.hpp"

namespace uniton {

using Json = nlohmann::ordered_json;

/// Deterministic text: 2-space indent, insertion key order, floats as %.17g.
std::string dump_json(const Json& j);
/// Parses text; SchemaError on syntax errors.
Json parse_json(const std::string& text);

Json to_json(const RatFun& f);
RatFun ratfun_from_json(const Json& j);

Json to_json(const Matrix<Complex>& m);
Json to_json(const ExactLoop& l);
Json to_json(const NumericLoop& l);
/// True when the coefficient records are RatFun records.
bool is_exact_loop_json(const Json& j);
ExactLoop exact_loop_from_json(const Json& j);
NumericLoop numeric_loop_from_json(const Json& j);

Json to_json(const ExtendedSolutionSpec& spec);
ExtendedSolutionSpec spec_from_json(const Json& j);

/// Free-function file: {"c1_0[1,2]": RatFun record, ...}.
std::map<std::string, RatFun> free_functions_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const UnitonNumberReport& r);
Json to_json(const IwasawaFactors& f);
Json to_json(const WeierstrassData& w);

}  // namespace uniton
