#pragma once

#include <string>
#include <string_view>

#include "cam/diagnostic.hpp"

namespace cam {

// Loads a JSON class-model document:
//
//   { "classes": [ { "name": str,
//                    "members": [ { "name": str, "kind": "variable"|"function",
//                                   "visibility": "public"|"private"|"protected" } ],
//                    "bases": [ { "name": str, "mode": "public"|"private"|"protected" } ],
//                    "friend_count": int >= 0 } ] }
//
// "members", "bases" and "friend_count" may be omitted (empty / 0). Unknown
// keys are Warnings; every other violation is an Error positioned at the
// offending key or object, and excludes the class it occurs in.
ParseResult load_model(std::string_view text, const std::string& file);

}  // namespace cam
