#pragma once

#include "gsb/attack.hpp"
#include "gsb/set_family.hpp"
#include "gsb/verifier.hpp"
#include "json.hpp"

namespace gsb {

nlohmann::json to_json(const Violation& v);
Violation violation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AttackParams& ap);
nlohmann::json to_json(const AttackReport& rep);
nlohmann::json to_json(const DistanceWitness& w);

nlohmann::json to_json(const SetFamily& f);

}  // namespace gsb
