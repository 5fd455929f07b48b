#pragma once

#include <string>

#include <json.hpp>

#include "weissler/bernoulli.hpp"
#include "weissler/conditions.hpp"
#include "weissler/verdict.hpp"
#include "weissler/weights.hpp"

namespace weissler {

// Keys come out sorted and floats in shortest round-trip form, so
// dump(parse(dump(x))) == dump(x) byte for byte.
nlohmann::json to_json(const ConditionReport& r);
nlohmann::json to_json(const InequalityVerdict& v);
nlohmann::json to_json(const BernoulliReport& r);
nlohmann::json to_json(const MomentSequence& h);

std::string dump_canonical(const nlohmann::json& j);

// q formatted with six decimals, the key used in the "psi" map.
std::string format_q(double q);

}  // namespace weissler
