#pragma once

#include "jstab/energy.hpp"
#include "jstab/newton_poly.hpp"

#include <json.hpp>

#include <string>

namespace jstab {

using json = nlohmann::json;

Rational rational_from_json(const json& j);
RVec rvec_from_json(const json& j);
json to_json(const Rational& q);
json to_json(const RVec& v);
json to_json(const DivisorClass& d);

IntersectionModel model_from_json(const json& j);
json model_to_json(const IntersectionModel& m);
// a JSON file path, or "builtin:projective_plane", "builtin:hirzebruch:<e>", "builtin:blown_up_plane"
IntersectionModel load_model(const std::string& spec);

// comma/plus separated "coef*label" terms, e.g. "1/3*C_0,5/3*f" or "C_0+2f"
DivisorClass parse_class(const IntersectionModel& m, const std::string& text);
std::string format_class(const IntersectionModel& m, const DivisorClass& d);
// "[D_0; D_1; ...]" with classes in parse_class syntax
FlagChain parse_chain(const IntersectionModel& m, const std::string& text);
// {"levels": [...], "l"} or a flag-ideal document with "class_map"
FlagChain chain_from_json(const IntersectionModel& m, const json& j);

MonomialFlagIdeal ideal_from_json(const json& j);
json ideal_to_json(const MonomialFlagIdeal& a);
json chain_to_json(const LocalChain& c);

json read_json_file(const std::string& path);

}  // namespace jstab
