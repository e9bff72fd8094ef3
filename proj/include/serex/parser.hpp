#pragma once

// Concrete syntax: tokenizer, recursive-descent parser, and a formatter
// whose output always parses back to a structurally equal tree.
//
//   expr     := term (("+" | "-") term)*
//   term     := unary (("*" | "/") unary)*
//   unary    := "-" unary | factor
//   factor   := atom ("^" exponent)?
//   atom     := rational | "n" | "(" expr ")"
//             | "sqrt" "(" expr ")" | "root" "(" integer "," expr ")"
//   exponent := signed-integer | "(" signed-integer "/" integer ")"
//   rational := integer | "(" signed-integer "/" integer ")" | decimal-literal
//
// A parenthesized fraction of two integer literals is a rational constant,
// not a division.  Decimal literals convert exactly to rationals.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "serex/expr.hpp"

namespace serex {

enum class TokenKind {
  Integer,
  Decimal,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found);
  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::string expected_, found_;
};

// Longest-munch lexing; whitespace skipped; any other byte is a ParseError.
std::vector<Token> tokenize(std::string_view text);

ExprPtr parse(std::string_view text);

// Fully parenthesized canonical text; parse(format(e)) == e structurally.
std::string format(const ExprPtr& e);

// Two-line caret diagnostic for terminal display.
std::string render_parse_error(std::string_view text, const ParseError& err);

}  // namespace serex
