#pragma once

#include <json.hpp>

#include "fsn/syntax.hpp"

namespace fsn {

// Structured AST format: one object per node, `tag` naming the variant and
// the remaining fields named after its components.
nlohmann::json toJson(const Type& t);
nlohmann::json toJson(const Term& m);
nlohmann::json toJson(const Context& ctx);
nlohmann::json toJson(const Program& p);

// Throws std::invalid_argument on malformed input.
Type typeFromJson(const nlohmann::json& j);
Term termFromJson(const nlohmann::json& j);
Context contextFromJson(const nlohmann::json& j);
Program programFromJson(const nlohmann::json& j);

}  // namespace fsn
