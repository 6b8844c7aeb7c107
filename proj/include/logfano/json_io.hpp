#pragma once

// JSON wire formats. Rationals are always strings "p/q" (or "p"), never
// floating point; infinite interval endpoints are the strings "-inf"/"+inf".
// Every emitter has a matching parser and parse(emit(x)) == x.

#include <json.hpp>

#include "logfano/certifier.hpp"
#include "logfano/interval.hpp"
#include "logfano/lattice.hpp"
#include "logfano/mori.hpp"
#include "logfano/secant.hpp"
#include "logfano/weightspace.hpp"

namespace logfano {

using Json = nlohmann::json;

Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);

// {"n":4, "k":5, "h":"4", "e":["-2","-2",...]}
Json divisor_to_json(const DivisorClass& d);
DivisorClass divisor_from_json(const Json& j);

// {"n":4, "k":5, "l":"2", "r":["-1",...]}
Json curve_to_json(const CurveClass& c);
CurveClass curve_from_json(const Json& j);

// {"interval":{"lower":"2/3","upper":"1","lower_open":true,"upper_open":true}}
// or {"interval":{"empty":true}}
Json interval_to_json(const EpsilonInterval& iv);
EpsilonInterval interval_from_json(const Json& j);

// [{"gen":"L_1_2","coeff":"1"}, ...]
Json decomposition_to_json(const std::vector<DecompositionTerm>& terms);
std::vector<DecompositionTerm> decomposition_from_json(const Json& j);

// {"walls":[{"I":[1,3],"k":3,"sign":"above"}, ...]}
Json signature_to_json(const ChamberSignature& sig);
ChamberSignature signature_from_json(const Json& j, int n);

Json join_label_to_json(const JoinLabel& label);
JoinLabel join_label_from_json(const Json& j);

// Full certificate, ledger rows included with a discrepancy sample.
Json certificate_to_json(const Certificate& cert);

Json positivity_to_json(const PositivityReport& report);

}  // namespace logfano
