#ifndef IVLP_PARSER_HPP
#define IVLP_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ivlp/program.hpp"

namespace ivlp {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t col, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + what),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

private:
  std::size_t line_, col_;
};

namespace detail {

// Hand-rolled recursive-descent parser for the clause grammar:
//   clause  := atom "." | atom ":-" literal ("," literal)* "."
//   literal := "not" atom | "true" | "false" | atom
//   atom    := pred | pred "(" term ("," term)* ")"
// Predicates and constants match [a-z][A-Za-z0-9_]*, variables
// [A-Z][A-Za-z0-9_]*. "%" starts a comment running to end of line.
class ClauseParser {
public:
  explicit ClauseParser(std::string_view text) : text_(text) {}

  Program parse() {
    Program p;
    skip_ws();
    while (pos_ < text_.size()) {
      p.clauses.push_back(parse_clause());
      skip_ws();
    }
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, col_, msg);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    if (peek() != c) fail(std::string("expected ") + what);
    advance();
  }

  static bool ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  std::string parse_ident() {
    char c = peek();
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')))
      fail("expected identifier");
    std::string id;
    while (ident_char(peek())) {
      id += peek();
      advance();
    }
    return id;
  }

  Atom parse_atom(const std::string& pred) {
    Atom a;
    a.pred = pred;
    if (peek() == '(') {
      advance();
      skip_ws();
      while (true) {
        std::string term = parse_ident();
        skip_ws();
        if (peek() == '(')
          fail("function symbols are not supported: '" + term + "'");
        a.args.push_back(term);
        if (peek() == ',') {
          advance();
          skip_ws();
          continue;
        }
        break;
      }
      expect(')', "')'");
    }
    return a;
  }

  Atom parse_head_atom() {
    std::string id = parse_ident();
    if (is_variable(id)) fail("clause head must start with a predicate");
    if (id == "true" || id == "false" || id == "not")
      fail("'" + id + "' is reserved");
    return parse_atom(id);
  }

  Literal parse_literal() {
    std::string id = parse_ident();
    if (id == "true") return Literal::true_const();
    if (id == "false") return Literal::false_const();
    bool negated = false;
    if (id == "not") {
      negated = true;
      skip_ws();
      id = parse_ident();
      if (id == "true" || id == "false" || id == "not")
        fail("'" + id + "' cannot be negated");
    }
    if (is_variable(id)) fail("expected atom, found variable '" + id + "'");
    Atom a = parse_atom(id);
    return negated ? Literal::neg(std::move(a)) : Literal::pos(std::move(a));
  }

  Clause parse_clause() {
    Clause c;
    c.head = parse_head_atom();
    skip_ws();
    if (peek() == ':') {
      advance();
      expect('-', "':-'");
      skip_ws();
      while (true) {
        c.body.push_back(parse_literal());
        skip_ws();
        if (peek() == ',') {
          advance();
          skip_ws();
          continue;
        }
        break;
      }
    }
    expect('.', "'.' at end of clause");
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace detail

/// Parses program text into an (ungrounded) Program. Throws ParseError with
/// line/column on malformed input; function terms are rejected up front.
inline Program parse_program(std::string_view text) {
  return detail::ClauseParser(text).parse();
}

}  // namespace ivlp

#endif  // IVLP_PARSER_HPP
