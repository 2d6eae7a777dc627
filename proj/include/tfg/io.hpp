#pragma once

// JSON files for triples and quadruples, and JSON renderings of results.

#include "tfg/automorphisms.hpp"
#include "tfg/classification.hpp"

#include <json.hpp>

#include <string>

namespace tfg {

using Json = nlohmann::ordered_json;

// {"group": {"order", "mul", "names"?}, "a0": [...], "a1": [...]} or {"fixture": name}.
Triple triple_from_json(const Json& j);
Json triple_to_json(const Triple& t);
Triple load_triple(const std::string& path);

// {"zeta", "f", "phi", "beta"}; f is a loop string, {"digit_sum": ζ} or
// {"zeta_gamma": {"zeta": ζ, "phi": table}}.
Quadruple quadruple_from_json(const Json& j, const Triple& t);
Json quadruple_to_json(const Quadruple& q);

Json witness_to_json(const IsoWitness& w);
Json decision_to_json(const Decision& d);

}  // namespace tfg
