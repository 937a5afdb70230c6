#pragma once

#include <json.hpp>

#include "gl3/catalog.hpp"
#include "gl3/intertwine.hpp"
#include "gl3/qpoly.hpp"
#include "gl3/steinberg.hpp"
#include "gl3/theorem_harness.hpp"
#include "gl3/triple.hpp"

namespace gl3 {

// QPoly serialises as its coefficient array, lowest degree first.
void to_json(nlohmann::json& j, const QPoly& p);
void from_json(const nlohmann::json& j, QPoly& p);
void to_json(nlohmann::json& j, const Triple& t);
void from_json(const nlohmann::json& j, Triple& t);

nlohmann::json weyl_map_json(const std::map<Weyl, QPoly>& m);
nlohmann::json descriptor_json(const RepDescriptor& r);
nlohmann::json report_json(const IntertwiningReport& r);
nlohmann::json report_json(const TheoremReport& r);
nlohmann::json virtual_rep_json(const VirtualRep& v);
VirtualRep virtual_rep_from_json(const nlohmann::json& j);

}  // namespace gl3
