#pragma once

#include <permod/decide.hpp>
#include <permod/oracle.hpp>
#include <permod/pmod.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace permod {

using json = nlohmann::json;

// Canonical JSON. Objects carry sorted keys, scalars and rationals are
// strings, ModVector terms are in lexicographic tuple order.

json to_json(const ModVector& v);
// Rejects zero coefficients, duplicate tuples, bad rationals and arity
// mismatches; messages name the offending term.
ModVector modvector_from_json(const json& j);

// A file holds either one ModVector object or an array of them.
std::vector<ModVector> modvectors_from_json(const json& j);

json to_json(const ParamSet& s);
ParamSet paramset_from_json(const json& j);
// "0,2" or "0, 1/2, 3"; empty string is the empty set.
ParamSet parse_param_list(std::string_view text);

json to_json(const AugVector& v);
AugVector augvector_from_json(const json& j, RingSpec ring);

json to_json(const ExplicitWitness& w);
ExplicitWitness witness_from_json(const json& j, RingSpec ring);

json to_json(const Decision& d, bool emit_certificate = true);
Decision decision_from_json(const json& j);

json to_json(const InstanceProfile& p);
InstanceProfile profile_from_json(const json& j);
json to_json(const Instance& inst);
Instance instance_from_json(const json& j);

// Stable text form: two-space indentation and a trailing newline.
std::string dump_canonical(const json& j);

} // namespace permod
