#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "envact/universal.hpp"

namespace envact::cli {

using json = nlohmann::json;

/// A core-library error surfaced through a command (bad group table,
/// unsupported size, an action that fails validation where a valid one is
/// required, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::array<std::string_view, 6> kCommands = {
    "validate", "globalize", "diagnose", "embed", "shift-demo", "export-dot"};

struct Options {
  /// Size of the cyclic group for shift-demo.
  std::size_t n = 4;
  BaseChoice base = BaseChoice::Full;
};

struct Outcome {
  json report;
  /// Set by export-dot and globalize.
  std::optional<std::string> dot;
  /// Some audit failed: a defect in the library, not in the input.
  bool bug = false;
};

/// Runs one command on a parsed document. shift-demo ignores `document`.
/// Throws SchemaError, DomainError or std::invalid_argument (unknown
/// command).
Outcome run(std::string_view command, const json& document,
            const Options& options);

/// Indented JSON followed by a newline.
std::string format_json(const Outcome& outcome);
/// Human-readable form, with a banner when an audit failed.
std::string format_text(const Outcome& outcome);

}  // namespace envact::cli
