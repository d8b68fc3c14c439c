#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "nscartan/counting.hpp"
#include "nscartan/gates.hpp"
#include "nscartan/invariants.hpp"

namespace nscartan {

using Json = nlohmann::ordered_json;

Json to_json(const CurveInvariants& inv);
Json to_json(const PointCountReport& rep);
Json to_json(const GateEntry& e);
Json to_json(const GateReport& r);
Json to_json(const std::vector<CheckResult>& checks);

/// Fixed lattice list, Cartan-fixed sublist and the normalizer verdict for p.
Json lattices_report(uint32_t p);
/// T_l table on the basis cusps, D_l checks and disjoint-support choices.
Json cuspdiv_report(uint32_t p, uint32_t l);

/// Indented "key: value" text in the key order of `j`. Scalars only appear
/// as integers, booleans or strings.
std::string render_text(const Json& j);

}  // namespace nscartan
