#pragma once

#include <json.hpp>

#include "homcat/complexes.hpp"

namespace homcat {

using json = nlohmann::json;

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const FieldSpec& f, const json& j, int expected_len);

// { "field": "Q" | {"Fp": p}, "dim": d, "basis": [..], "mult": [[i,j,k,"c"]..],
//   "unit": [..], "idempotents": [[..]..] }; omitted mult triples are zero.
json algebra_to_json(const FDAlgebra& a);
AlgebraPtr algebra_from_json(const json& j);

// { "terms": {"<degree>": [idempotent indices]},
//   "diff":  {"<degree>": [[coeff-vector ..] ..]} } with diff["<n>"][target][source]
// a coefficient vector of length dim.
json complex_to_json(const ProjComplex& x);
ProjComplex complex_from_json(const AlgebraPtr& a, const json& j);

json chain_map_to_json(const ChainMap& f);

json int_mat_to_json(const IntMat& m);
json fingerprint_to_json(const Fingerprint& fp);

json load_json_file(const std::string& path);

} // namespace homcat
