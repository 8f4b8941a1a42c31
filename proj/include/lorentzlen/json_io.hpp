#pragma once

#include <string>

#include <json.hpp>

#include "lorentzlen/extreal.hpp"
#include "lorentzlen/space.hpp"

namespace lls {

// JSON serialization of a space description. Infinite tau values are written
// as the string "inf"; everything else is plain numbers/arrays. Loading
// validates shapes and finiteness and throws std::runtime_error on bad input.
nlohmann::json space_to_json(const SpaceDescription& sp);
SpaceDescription space_from_json(const nlohmann::json& j);

SpaceDescription load_space(const std::string& path);
void save_space(const SpaceDescription& sp, const std::string& path);

// Shared report helpers for machine output.
nlohmann::json report_header(const std::string& command);
std::string verdict_name(Verdict v);
nlohmann::json extreal_to_json(const ExtReal& v);

}  // namespace lls
