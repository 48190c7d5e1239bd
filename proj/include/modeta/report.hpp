#pragma once

// Structured results for the command line and the C API. Every command
// builds one JSON object; the text form is rendered from the same object so
// both outputs always carry identical values. Rationals are "num/den"
// strings. When epsilon is not pinned, each epsilon-dependent field becomes
// an object {"+1": ..., "-1": ...}.

#include <optional>
#include <string>

#include <json.hpp>

#include "modeta/bundle.hpp"
#include "modeta/eta.hpp"

namespace modeta {

using Json = nlohmann::ordered_json;

Json to_json(const FiveManifoldClass& manifold);

Json classify_report(const BundleSpec& spec, std::optional<Epsilon> eps);
Json cobordism_report(const IntersectionForm& form, const CohomologyClass& d, std::optional<Epsilon> eps);
Json quotients_report(const FiveManifoldClass& manifold);
/// Classifies the bundle, then lists standard quotients per epsilon branch.
Json quotients_report(const BundleSpec& spec, std::optional<Epsilon> eps);
Json family_type_three_report(const IntersectionForm& form, int target, int count, std::optional<Epsilon> eps);
Json family_type_one_report(const IntersectionForm& form, int q, int count);
Json eta_table_report(int a, int b, int count, std::optional<Epsilon> eps, int target);

/// "key: value" lines; nested objects use dotted keys and arrays of objects
/// with the same keys become aligned tables.
std::string render_text(const Json& report);

}  // namespace modeta
