#include "json_util.hpp"

namespace aggression::detail {

TextPos position_of(std::string_view text, std::size_t offset) {
  TextPos p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

std::size_t locate(std::string_view text, std::string_view key, int index) {
  int depth = 0;
  bool in_string = false;
  std::size_t string_start = 0;
  std::size_t key_at = std::string_view::npos;
  bool expect_value = false;
  int array_depth = -1;
  int element = 0;
  bool element_started = false;

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
        if (depth == 1 && key_at == std::string_view::npos &&
            text.substr(string_start + 1, i - string_start - 1) == key) {
          key_at = string_start;
          if (index < 0) return key_at;
          expect_value = true;
        }
      }
      continue;
    }
    if (array_depth >= 0 && depth == array_depth + 1 && !element_started &&
        c != ' ' && c != '\n' && c != '\r' && c != '\t' && c != ',' && c != ']') {
      if (element == index) return i;
      element_started = true;
    }
    switch (c) {
      case '"':
        in_string = true;
        string_start = i;
        break;
      case '{':
      case '[':
        if (expect_value && c == '[' && depth == 1) {
          array_depth = depth;
          expect_value = false;
        }
        ++depth;
        break;
      case '}':
      case ']':
        --depth;
        if (array_depth >= 0 && depth == array_depth) return std::string_view::npos;
        break;
      case ',':
        if (array_depth >= 0 && depth == array_depth + 1) {
          ++element;
          element_started = false;
        }
        break;
      default:
        break;
    }
  }
  return std::string_view::npos;
}

nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto p = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", p.line, p.column);
  }
}

void fail_at(std::string_view text, std::string_view key, int index, const std::string& message) {
  std::size_t at = locate(text, key, index);
  if (at == std::string_view::npos) at = locate(text, key, -1);
  if (at == std::string_view::npos) throw ParseError(message, 0, 0);
  const auto p = position_of(text, at);
  throw ParseError(message, p.line, p.column);
}

long long require_int(const nlohmann::json& obj, const char* key, std::string_view text) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing \"") + key + "\"", 1, 1);
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail_at(text, key, -1, std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

}  // namespace aggression::detail
