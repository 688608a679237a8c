#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrc/constructions.hpp"
#include "lrc/error.hpp"

namespace lrc {

inline constexpr int kCodeFileSchemaVersion = 1;

/// The file is not valid JSON or lacks a required field.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Prime-field elements encode as a bare integer, extension-field elements
/// as their base-p digits, lowest degree first.
nlohmann::ordered_json element_to_json(const Field& field, std::uint32_t value);
std::uint32_t element_from_json(const Field& field, const nlohmann::ordered_json& j);

nlohmann::ordered_json field_to_json(const Field& field);

nlohmann::ordered_json to_json(const LrcCode& code);
std::string save_code(const LrcCode& code);

struct LoadedCode {
  std::optional<LrcCode> code;          // present whenever g generates a valid cyclic code
  std::vector<std::string> violations;  // stored data disagreeing with recomputation
};

/// Parses a code file. Throws FormatError for malformed input; consistency
/// problems (tampered coefficients, wrong derived data) land in violations.
LoadedCode load_code(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace lrc
