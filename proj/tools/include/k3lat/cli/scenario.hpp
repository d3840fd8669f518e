#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "k3lat/integer.hpp"

namespace k3lat::cli {

struct SourcePos {
  int line = 0;
  int column = 0;
};

// Syntax errors and unresolved names; both map to exit code 2.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  SourcePos pos_;
  std::string message_;
};

// A literal as written in the file. Bare holds unquoted text that is neither an integer nor a
// keyword: names and class expressions such as L-2E.
struct Value {
  enum class Kind { Null, Bool, Integer, String, List, Bare };
  Kind kind = Kind::Null;
  bool boolean = false;
  Integer integer;
  std::string text;
  std::vector<Value> items;
  SourcePos pos;
};

std::string render(const Value& v);

struct Argument {
  std::string key;  // empty for positional arguments
  Value value;
};

struct Call {
  std::string name;
  std::vector<Argument> args;
  SourcePos pos;
};

struct Declaration {
  enum class Kind { Lattice, Class, Context, Config };
  Kind kind = Kind::Lattice;
  std::string name;
  SourcePos pos;
  Call call;                  // lattice, context and config declarations
  std::string lattice_name;   // class declarations: "class H = O: L + 2E"
  std::string expression;
  SourcePos expression_pos;
};

struct Assertion {
  Call call;
  std::optional<Value> expected;          // "== value"
  std::optional<std::string> error_kind;  // "raises Kind"
  std::optional<std::string> flag_note;   // "flag \"note\"": a mismatch is reported as flagged
  std::string text;                       // source text of the statement
  SourcePos pos;
};

using Statement = std::variant<Declaration, Assertion>;

struct Scenario {
  std::vector<Statement> statements;
};

// Throws ScenarioError with the line and column of the first syntax error.
Scenario parse_scenario(std::string_view text);

}  // namespace k3lat::cli
