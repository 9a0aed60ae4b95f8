#ifndef OMEGALAB_JSON_IO_HPP
#define OMEGALAB_JSON_IO_HPP

#include "omegalab/certify.hpp"
#include "omegalab/derivative_space.hpp"
#include "omegalab/polymatroid.hpp"

#include <json.hpp>

namespace omegalab {

inline constexpr const char* kSchema = "omegalab/1";

nlohmann::json to_json(const LatticePolytope& p);
nlohmann::json to_json(const SetFunction& f);
nlohmann::json to_json(const DerivativeSpace& ds);
nlohmann::json to_json(const LorentzianReport& r);
nlohmann::json to_json(const KReport& r);
nlohmann::json to_json(const SmoothnessCertificate& c);

// Rebuilds the polytope from its "vertices" member.
LatticePolytope polytope_from_json(const nlohmann::json& j);
SetFunction set_function_from_json(const nlohmann::json& j);

}  // namespace omegalab

#endif
