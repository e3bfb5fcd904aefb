#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "aggression/errors.hpp"

namespace aggression::detail {

using ordered_json = nlohmann::ordered_json;

struct TextPos {
  int line = 0;
  int column = 0;
};

TextPos position_of(std::string_view text, std::size_t offset);

/// Byte offset of element `index` of the array stored under top-level `key`,
/// or of the key itself when index < 0. Returns npos when not found.
std::size_t locate(std::string_view text, std::string_view key, int index = -1);

/// Parses JSON, turning syntax errors into ParseError with a position.
nlohmann::json parse_json(std::string_view text);

[[noreturn]] void fail_at(std::string_view text, std::string_view key, int index,
                          const std::string& message);

/// Integer member lookup with a located diagnostic.
long long require_int(const nlohmann::json& obj, const char* key, std::string_view text);

}  // namespace aggression::detail
