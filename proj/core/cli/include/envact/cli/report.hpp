#pragma once

#include <string>

#include <json.hpp>

#include "envact/globalization.hpp"
#include "envact/partial_action.hpp"
#include "envact/universal.hpp"

namespace envact::cli {

using json = nlohmann::json;

json to_json(const ValidationReport& report, const FiniteGroup& group);
json to_json(const SeparationReport& report);
json to_json(const FlagSet& flags);
json to_json(const EnvelopeReport& report);
json to_json(const DiagnosticsReport& report);
json to_json(const EmbeddingReport& report);
json to_json(const Audit& audit);

/// Class table of X_G: label, members as [element, point] pairs, and
/// whether the class lies in iota(X).
json class_table(const EnvelopingSpace& env);

/// {point: [[element names] per base set]}.
json embedding_points(const EmbeddingImage& image);

/// A tuple of subsets as nested lists of element names.
json tuple_json(const FiniteGroup& group, const SubsetTuple& tuple);

/// Plain-text rendering of a report document, one "key: value" per line,
/// nested objects indented.
std::string render_text(const json& report);

}  // namespace envact::cli
