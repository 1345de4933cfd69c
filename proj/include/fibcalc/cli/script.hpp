#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibcalc/algebra/error.hpp"

namespace fibcalc {

class ScriptError : public MalformedInput {
 public:
  ScriptError(int line, int column, const std::string& message)
      : MalformedInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Statement {
  std::optional<std::string> binding;
  std::string verb;
  std::vector<std::string> args;
  int line = 0;  // source line, 1-based; 0 when built in code

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.binding == b.binding && a.verb == b.verb && a.args == b.args;
  }
};

struct SurgeryScript {
  std::vector<Statement> statements;

  friend bool operator==(const SurgeryScript&, const SurgeryScript&) = default;
};

// Verb -> number of arguments.
const std::vector<std::pair<std::string, int>>& script_verbs();

// One statement per line: `[name =] verb arg...`; `#` starts a comment.
SurgeryScript parse_script(std::string_view text);
std::string print_script(const SurgeryScript& script);

}  // namespace fibcalc
