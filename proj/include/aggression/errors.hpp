#pragma once

#include <stdexcept>
#include <string>

namespace aggression {

/// A move or construction broke a game rule. `rule()` is a stable kebab-case
/// identifier such as "vertex-occupied" that front ends surface verbatim.
class RuleError : public std::invalid_argument {
 public:
  RuleError(std::string rule, const std::string& detail)
      : std::invalid_argument(rule + ": " + detail), rule_(std::move(rule)) {}
  const std::string& rule() const { return rule_; }

 private:
  std::string rule_;
};

/// Search exceeded its node or time budget.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Line and column are 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A scripted strategy reached a situation its script does not cover.
class Unspecified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A strategy produced something inconsistent: an illegal move or a naming
/// that is not a partial isomorphism. Always a bug in the script.
class StrategyBug : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace aggression
