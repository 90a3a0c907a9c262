#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "envact/group.hpp"
#include "envact/partial_action.hpp"
#include "envact/topology.hpp"

namespace envact::cli {

using json = nlohmann::json;

/// Malformed JSON text. The message carries the byte offset, line and
/// column of the failure.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed JSON that does not describe an action. The message starts
/// with the JSON pointer of the offending value.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what) {}
};

json parse_text(std::string_view text);

/// {"names": [...], "mul": [[...]]}, {"cyclic": n} or {"product": [a, b]}.
FiniteGroup parse_group(const json& doc, const std::string& path = "/group");

/// {"points": n, "subbase": [[...]]}, {"discrete": n}, {"indiscrete": n} or
/// {"sierpinski": true}.
FiniteSpace parse_space(const json& doc, const std::string& path = "/space");

/// An action document:
///   {"group": G, "space": S, "maps": {g: {"domain": [...], "map": {x: y}}}}
/// where g is an element name (or index), m_1 defaults to the identity and
/// other omitted elements act nowhere. Alternatively one of the worked
/// examples: {"example": {"shift": n}}, {"example": {"sierpinski_z2": true}}
/// or {"example": {"trivial": {"group": G, "space": S}}}.
PartialAction parse_action(const json& doc);

json serialize_group(const FiniteGroup& group);
json serialize_space(const FiniteSpace& space);
/// Canonical explicit form; parse_action() accepts it back unchanged.
json serialize_action(const PartialAction& action);

/// The partial action of Z_2 on the Sierpinski space where the non-identity
/// element fixes the open point and is undefined on the closed one.
PartialAction sierpinski_z2();

/// FNV-1a of the canonical serialization, as 16 hex digits.
std::string digest(const json& canonical);

}  // namespace envact::cli
