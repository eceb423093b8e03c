#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "schubcone/decomp.hpp"
#include "schubcone/schubert.hpp"

namespace schubcone {

using json = nlohmann::ordered_json;

// {"coords": [..], "eps": "e1-e2"}; eps only in classical types
json root_json(const RootSystem& rs, const Root& r);
json roots_json(const RootSystem& rs, const std::vector<Root>& v);
// lexmin word, e.g. "1,2,1"; "" for the identity
json elt_json(const WeylGroup& G, const WeylElt& w);

json certificate_json(const RootSystem& rs, const DecompositionCertificate& c);
json farkas_json(const FarkasCertificate& f);
json inversion_table_json(const WeylGroup& G, const InversionTable& T);
json weight_report_json(const WeylGroup& G, const WeightReport& R);
json character_json(const RootSystem& rs, const std::map<Root, BigInt>& ch);

// inverse of root_json / elt_json
Root root_from_json(const RootSystem& rs, const json& j);
WeylElt elt_from_json(const WeylGroup& G, const json& j);

}  // namespace schubcone
