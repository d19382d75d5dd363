#pragma once

// JSON renderings of the library's reports. Rationals are written as strings
// ("7/2", "-3") so they round-trip exactly through Rational::parse.

#include <json.hpp>

#include "gkdim/gk.hpp"
#include "gkdim/hermitian.hpp"

namespace gkdim {

nlohmann::json to_json(const YoungTableau& t);
nlohmann::json to_json(const GKReport& r);
nlohmann::json to_json(const HermitianReport& r);
nlohmann::json to_json(const UnitaryInterval& iv);

YoungTableau tableau_from_json(const nlohmann::json& j);

}  // namespace gkdim
