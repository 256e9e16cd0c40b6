#pragma once

#include <string>

#include <json.hpp>

namespace procphi::io {

using Json = nlohmann::ordered_json;

/// Deterministic JSON text: two-space indentation, keys in insertion order,
/// floating-point numbers printed with %.17g (round-trips exactly),
/// negative zero written as 0. Ends with a newline.
std::string dump_canonical(const Json& value);

}  // namespace procphi::io
