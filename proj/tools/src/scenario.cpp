#include "k3lat/cli/scenario.hpp"

#include <cctype>

#include "k3lat/errors.hpp"

namespace k3lat::cli {

ScenarioError::ScenarioError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

std::string render(const Value& v) {
  switch (v.kind) {
    case Value::Kind::Null: return "null";
    case Value::Kind::Bool: return v.boolean ? "true" : "false";
    case Value::Kind::Integer: return to_string(v.integer);
    case Value::Kind::String: return "\"" + v.text + "\"";
    case Value::Kind::Bare: return v.text;
    case Value::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < v.items.size(); ++i) out += (i ? ", " : "") + render(v.items[i]);
      return out + "]";
    }
  }
  return "";
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_integer_text(std::string_view s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scenario parse() {
    Scenario out;
    while (true) {
      skip_inline_ws();
      if (at_end()) break;
      if (peek() == '#') {
        skip_comment();
        continue;
      }
      if (peek() == '\n' || peek() == '\r') {
        advance();
        continue;
      }
      out.statements.push_back(statement());
      end_of_line();
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;

  bool at_end() const { return i_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0'; }
  SourcePos pos() const { return {line_, col_}; }

  void advance() {
    if (text_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ScenarioError(pos(), message); }
  [[noreturn]] void fail_at(SourcePos p, const std::string& message) const { throw ScenarioError(p, message); }

  void skip_inline_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) advance();
  }
  void skip_comment() {
    while (!at_end() && peek() != '\n') advance();
  }
  // Inside brackets newlines and comments are insignificant.
  void skip_any_ws() {
    while (!at_end()) {
      if (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r') advance();
      else if (peek() == '#') skip_comment();
      else break;
    }
  }

  void end_of_line() {
    skip_inline_ws();
    if (!at_end() && peek() == '#') skip_comment();
    if (peek() == '\r') advance();
    if (at_end()) return;
    if (peek() != '\n') fail(std::string("unexpected '") + peek() + "' after statement");
    advance();
  }

  void expect(char c) {
    if (peek() != c) {
      if (at_end()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + peek() + "'");
    }
    advance();
  }

  std::string identifier() {
    if (!is_ident_start(peek())) fail("expected a name");
    std::string out;
    while (!at_end() && is_ident_char(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  Statement statement() {
    const SourcePos start = pos();
    const std::size_t begin = i_;
    const std::string keyword = identifier();
    if (keyword == "assert") {
      Assertion a = assertion();
      a.pos = start;
      a.text = trimmed(begin);
      return a;
    }
    Declaration d;
    d.pos = start;
    if (keyword == "lattice") d.kind = Declaration::Kind::Lattice;
    else if (keyword == "class") d.kind = Declaration::Kind::Class;
    else if (keyword == "context") d.kind = Declaration::Kind::Context;
    else if (keyword == "config") d.kind = Declaration::Kind::Config;
    else fail_at(start, "unknown statement '" + keyword + "' (expected lattice, class, context, config or assert)");
    skip_inline_ws();
    d.name = identifier();
    skip_inline_ws();
    expect('=');
    skip_inline_ws();
    if (d.kind == Declaration::Kind::Class) {
      d.lattice_name = identifier();
      skip_inline_ws();
      expect(':');
      skip_inline_ws();
      d.expression_pos = pos();
      while (!at_end() && peek() != '\n' && peek() != '#') {
        d.expression += peek();
        advance();
      }
      while (!d.expression.empty() && std::isspace(static_cast<unsigned char>(d.expression.back())))
        d.expression.pop_back();
      if (d.expression.empty()) fail_at(d.expression_pos, "empty class expression");
    } else {
      d.call = call();
    }
    return d;
  }

  std::string trimmed(std::size_t begin) const {
    std::string s(text_.substr(begin, i_ - begin));
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
  }

  Assertion assertion() {
    Assertion a;
    skip_inline_ws();
    a.call = call();
    skip_inline_ws();
    if (peek() == '=' && peek(1) == '=') {
      advance();
      advance();
      skip_inline_ws();
      a.expected = value(true);
    } else if (is_ident_start(peek())) {
      const SourcePos p = pos();
      const std::string word = identifier();
      if (word != "raises") fail_at(p, "expected '==' or 'raises'");
      skip_inline_ws();
      a.error_kind = identifier();
    } else {
      fail("expected '==' or 'raises'");
    }
    skip_inline_ws();
    if (is_ident_start(peek())) {
      const SourcePos p = pos();
      if (identifier() != "flag") fail_at(p, "expected 'flag' or end of line");
      skip_inline_ws();
      const Value note = value(false);
      if (note.kind != Value::Kind::String) fail_at(note.pos, "flag needs a quoted note");
      a.flag_note = note.text;
    }
    return a;
  }

  Call call() {
    Call c;
    c.pos = pos();
    c.name = identifier();
    skip_inline_ws();
    expect('(');
    skip_any_ws();
    if (peek() == ')') {
      advance();
      return c;
    }
    while (true) {
      skip_any_ws();
      Argument arg;
      // key=value, but not key==value
      std::size_t j = i_;
      while (j < text_.size() && is_ident_char(text_[j])) ++j;
      std::size_t k = j;
      while (k < text_.size() && (text_[k] == ' ' || text_[k] == '\t')) ++k;
      if (j > i_ && is_ident_start(peek()) && k < text_.size() && text_[k] == '=' &&
          (k + 1 >= text_.size() || text_[k + 1] != '=')) {
        arg.key = identifier();
        skip_inline_ws();
        expect('=');
        skip_any_ws();
      }
      arg.value = value(false);
      c.args.push_back(std::move(arg));
      skip_any_ws();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(')');
      break;
    }
    return c;
  }

  Value value(bool top_level) {
    Value v;
    v.pos = pos();
    if (peek() == '"') {
      advance();
      v.kind = Value::Kind::String;
      while (true) {
        if (at_end() || peek() == '\n') fail_at(v.pos, "unterminated string");
        if (peek() == '"') {
          advance();
          break;
        }
        if (peek() == '\\') {
          advance();
          if (at_end()) fail_at(v.pos, "unterminated string");
        }
        v.text += peek();
        advance();
      }
      return v;
    }
    if (peek() == '[') {
      advance();
      v.kind = Value::Kind::List;
      skip_any_ws();
      if (peek() == ']') {
        advance();
        return v;
      }
      while (true) {
        skip_any_ws();
        v.items.push_back(value(false));
        skip_any_ws();
        if (peek() == ',') {
          advance();
          continue;
        }
        expect(']');
        break;
      }
      return v;
    }
    // Bare text up to a separator at nesting depth zero.
    int depth = 0;
    std::string raw;
    while (!at_end()) {
      const char c = peek();
      if (c == '\n' || c == '#') break;
      if (depth == 0 && (c == ',' || c == ')' || c == ']')) break;
      if (top_level && depth == 0 && (c == ' ' || c == '\t') && flag_follows()) break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      raw += c;
      advance();
    }
    while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
    if (raw.empty()) fail_at(v.pos, "expected a value");
    if (is_integer_text(raw)) {
      v.kind = Value::Kind::Integer;
      v.integer = parse_integer(raw[0] == '+' ? raw.substr(1) : raw);
    } else if (raw == "true" || raw == "false") {
      v.kind = Value::Kind::Bool;
      v.boolean = raw == "true";
    } else if (raw == "null") {
      v.kind = Value::Kind::Null;
    } else {
      v.kind = Value::Kind::Bare;
      v.text = raw;
    }
    return v;
  }

  bool flag_follows() const {
    std::size_t j = i_;
    while (j < text_.size() && (text_[j] == ' ' || text_[j] == '\t')) ++j;
    if (text_.substr(j, 4) != "flag") return false;
    const char after = j + 4 < text_.size() ? text_[j + 4] : '\0';
    return after == ' ' || after == '\t' || after == '"';
  }
};

}  // namespace

Scenario parse_scenario(std::string_view text) { return Parser(text).parse(); }

}  // namespace k3lat::cli
