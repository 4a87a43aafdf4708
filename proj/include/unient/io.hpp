#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "unient/state.hpp"
#include "unient/verifier.hpp"

namespace unient {

inline constexpr std::string_view kSchema = "unient/1";

using AnyState = std::variant<PureState, DensityMatrix>;

/// {"schema": "unient/1", "dims": [...], "kind": "pure" | "mixed", "re": [...], "im": [...]}
/// with mixed matrices flattened row-major. Malformed documents throw ParseError;
/// well-formed ones that violate state invariants throw DomainError.
AnyState parse_state(std::string_view text);
AnyState read_state_file(const std::string& path);
nlohmann::json state_to_json(const AnyState& state);

nlohmann::json report_to_json(const SuiteReport& report);

/// Locale-independent formatting with `digits` significant digits.
std::string format_number(double value, int digits);

}  // namespace unient
