#pragma once

#include "raag/combinatorics.hpp"
#include "raag/descriptor.hpp"
#include "raag/generators.hpp"
#include "raag/graphproduct.hpp"
#include "raag/rewriting.hpp"
#include "raag/topology.hpp"

#include <json.hpp>

#include <string>

namespace raag {

using Json = nlohmann::json;

/// Parses text as JSON; syntax errors become ValidationError with the byte
/// offset and the source name.
Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

/// Integers that fit in int64 are written as numbers, others as strings.
Json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);

/// {"m": m, "edges": [[i,j],...]} gives the clique complex of the graph;
/// {"m": m, "maximal_faces": [[...],...]} gives the complex as listed.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& K);

Json to_json(const CommutatorDescriptor& d);
CommutatorDescriptor descriptor_from_json(const Json& j);

Json to_json(const CountReport& r);
CountReport count_report_from_json(const Json& j);

Json to_json(const SignedFactor& f);
SignedFactor signed_factor_from_json(const Json& j);
Json to_json(const FactorizedWord& f);
FactorizedWord factorized_from_json(const Json& j);

Json to_json(const VertexGroupSpec& spec);
VertexGroupSpec group_spec_from_json(const Json& j);

Json to_json(const GPDescriptor& d);
GPDescriptor gp_descriptor_from_json(const Json& j);

Json to_json(const HomologyResult& h);

}  // namespace raag
