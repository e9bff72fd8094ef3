#include "serex/parser.hpp"

#include <cctype>

namespace serex {
namespace {

std::string kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::Integer: return "integer";
    case TokenKind::Decimal: return "decimal";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
  }
  return "?";
}

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::Integer:
    case TokenKind::Decimal:
    case TokenKind::Ident:
      return kind_name(t.kind) + " '" + t.lexeme + "'";
    default:
      return kind_name(t.kind);
  }
}

struct Cursor {
  const std::vector<Token>& toks;
  std::size_t text_size;
  std::size_t pos = 0;

  const Token* peek(std::size_t ahead = 0) const {
    return pos + ahead < toks.size() ? &toks[pos + ahead] : nullptr;
  }

  bool at(TokenKind k, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t != nullptr && t->kind == k;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token* t = peek();
    if (t == nullptr) throw ParseError(text_size, expected, "end of input");
    throw ParseError(t->offset, expected, describe(*t));
  }

  Token take(TokenKind k, const std::string& expected) {
    if (!at(k)) fail(expected);
    return toks[pos++];
  }

  bool accept(TokenKind k) {
    if (!at(k)) return false;
    ++pos;
    return true;
  }
};

// Decimal-digit string to integer; immune to the C-style octal reading a
// leading zero would otherwise trigger.
Int int_from_digits(const std::string& digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return Int(0);
  return Int(digits.substr(first));
}

Int int_of(const Token& t) { return int_from_digits(t.lexeme); }

Rational decimal_of(const Token& t) {
  std::size_t dot = t.lexeme.find('.');
  Int num = int_from_digits(t.lexeme.substr(0, dot) + t.lexeme.substr(dot + 1));
  Int den = pow(Int(10), static_cast<unsigned>(t.lexeme.size() - dot - 1));
  return make_rational(num, den);
}

ExprPtr parse_expr(Cursor& cur);

// Rational-constant atom: "(" ["-"] integer "/" integer ")".
bool at_rational_literal(const Cursor& cur) {
  std::size_t i = 1;  // past '('
  if (cur.at(TokenKind::Minus, i)) ++i;
  return cur.at(TokenKind::Integer, i) && cur.at(TokenKind::Slash, i + 1) &&
         cur.at(TokenKind::Integer, i + 2) && cur.at(TokenKind::RParen, i + 3);
}

ExprPtr parse_atom(Cursor& cur) {
  const Token* t = cur.peek();
  if (t == nullptr) cur.fail("'n', a number, '(', 'sqrt', or 'root'");

  if (t->kind == TokenKind::Integer) {
    ++cur.pos;
    return Expr::constant(Rational(int_of(*t)));
  }
  if (t->kind == TokenKind::Decimal) {
    ++cur.pos;
    return Expr::constant(decimal_of(*t));
  }
  if (t->kind == TokenKind::Ident) {
    if (t->lexeme == "n") {
      ++cur.pos;
      return Expr::variable();
    }
    if (t->lexeme == "sqrt") {
      ++cur.pos;
      cur.take(TokenKind::LParen, "'(' after 'sqrt'");
      ExprPtr e = parse_expr(cur);
      cur.take(TokenKind::RParen, "')'");
      return desugar_root(Int(2), std::move(e));
    }
    if (t->lexeme == "root") {
      ++cur.pos;
      cur.take(TokenKind::LParen, "'(' after 'root'");
      Token kt = cur.take(TokenKind::Integer, "root index");
      Int k = int_of(kt);
      if (k < 1) throw ParseError(kt.offset, "positive root index", "'" + kt.lexeme + "'");
      cur.take(TokenKind::Comma, "','");
      ExprPtr e = parse_expr(cur);
      cur.take(TokenKind::RParen, "')'");
      return desugar_root(k, std::move(e));
    }
    cur.fail("'n', 'sqrt', or 'root'");
  }
  if (t->kind == TokenKind::LParen) {
    if (at_rational_literal(cur)) {
      ++cur.pos;
      bool neg = cur.accept(TokenKind::Minus);
      Token num = cur.take(TokenKind::Integer, "numerator");
      cur.take(TokenKind::Slash, "'/'");
      Token den = cur.take(TokenKind::Integer, "denominator");
      if (int_of(den) == 0) {
        throw ParseError(den.offset, "nonzero denominator", "'" + den.lexeme + "'");
      }
      cur.take(TokenKind::RParen, "')'");
      Int n = int_of(num);
      return Expr::constant(make_rational(neg ? Int(-n) : n, int_of(den)));
    }
    ++cur.pos;
    ExprPtr e = parse_expr(cur);
    cur.take(TokenKind::RParen, "')'");
    return e;
  }
  cur.fail("'n', a number, '(', 'sqrt', or 'root'");
}

Rational parse_exponent(Cursor& cur) {
  if (cur.at(TokenKind::Integer)) return Rational(int_of(cur.toks[cur.pos++]));
  if (cur.accept(TokenKind::Minus)) {
    Token t = cur.take(TokenKind::Integer, "integer exponent");
    return Rational(-int_of(t));
  }
  if (cur.accept(TokenKind::LParen)) {
    bool neg = cur.accept(TokenKind::Minus);
    Token num = cur.take(TokenKind::Integer, "exponent numerator");
    cur.take(TokenKind::Slash, "'/' in rational exponent");
    Token den = cur.take(TokenKind::Integer, "exponent denominator");
    if (int_of(den) == 0) {
      throw ParseError(den.offset, "nonzero denominator", "'" + den.lexeme + "'");
    }
    cur.take(TokenKind::RParen, "')'");
    Int n = int_of(num);
    return make_rational(neg ? Int(-n) : n, int_of(den));
  }
  cur.fail("integer or parenthesized rational exponent");
}

ExprPtr parse_factor(Cursor& cur) {
  ExprPtr e = parse_atom(cur);
  if (cur.accept(TokenKind::Caret)) {
    Rational expo = parse_exponent(cur);
    return Expr::pow(std::move(e), expo);
  }
  return e;
}

ExprPtr parse_unary(Cursor& cur) {
  if (cur.accept(TokenKind::Minus)) {
    ExprPtr e = parse_unary(cur);
    if (e->kind() == ExprKind::Constant) return Expr::constant(-e->constant_value());
    return Expr::sub(Expr::constant(Rational(0)), std::move(e));
  }
  return parse_factor(cur);
}

ExprPtr parse_term(Cursor& cur) {
  ExprPtr e = parse_unary(cur);
  for (;;) {
    if (cur.accept(TokenKind::Star)) {
      e = Expr::mul(std::move(e), parse_unary(cur));
    } else if (cur.accept(TokenKind::Slash)) {
      e = Expr::div(std::move(e), parse_unary(cur));
    } else {
      return e;
    }
  }
}

ExprPtr parse_expr(Cursor& cur) {
  ExprPtr e = parse_term(cur);
  for (;;) {
    if (cur.accept(TokenKind::Plus)) {
      e = Expr::add(std::move(e), parse_term(cur));
    } else if (cur.accept(TokenKind::Minus)) {
      e = Expr::sub(std::move(e), parse_term(cur));
    } else {
      return e;
    }
  }
}

std::string exponent_text(const Rational& expo) {
  if (is_integer(expo)) return to_text(expo);
  return "(" + to_text(expo) + ")";
}

// True when s is a single balanced "(...)" group.
bool is_one_group(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
      if (depth == 0 && i + 1 < s.size()) return false;
    }
  }
  return depth == 0;
}

std::string wrap(const ExprPtr& x) {
  std::string s = format(x);
  if (is_one_group(s)) return s;
  return "(" + s + ")";
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::string expected, std::string found)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                         expected + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++i;
      bool decimal = false;
      if (i + 1 < text.size() && text[i] == '.' &&
          std::isdigit(static_cast<unsigned char>(text[i + 1])) != 0) {
        decimal = true;
        ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) ++i;
      }
      out.push_back({decimal ? TokenKind::Decimal : TokenKind::Integer,
                     std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])) != 0) ++i;
      out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case ',': kind = TokenKind::Comma; break;
      default:
        throw ParseError(i, "a token", "illegal byte '" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  return out;
}

ExprPtr parse(std::string_view text) {
  std::vector<Token> toks = tokenize(text);
  Cursor cur{toks, text.size()};
  ExprPtr e = parse_expr(cur);
  if (cur.peek() != nullptr) cur.fail("end of input");
  return e;
}

std::string format(const ExprPtr& e) {
  switch (e->kind()) {
    case ExprKind::Constant: {
      const Rational& v = e->constant_value();
      if (is_integer(v)) return v >= 0 ? to_text(v) : "(" + to_text(v) + ")";
      return "((" + to_text(v) + "))";
    }
    case ExprKind::Variable:
      return "n";
    case ExprKind::Add:
      return wrap(e->left()) + "+" + wrap(e->right());
    case ExprKind::Sub:
      return wrap(e->left()) + "-" + wrap(e->right());
    case ExprKind::Mul:
      return wrap(e->left()) + "*" + wrap(e->right());
    case ExprKind::Div:
      return wrap(e->left()) + "/" + wrap(e->right());
    case ExprKind::Pow:
      return wrap(e->left()) + "^" + exponent_text(e->exponent());
  }
  throw std::logic_error("unreachable expression kind");
}

std::string render_parse_error(std::string_view text, const ParseError& err) {
  std::string out(text);
  out += "\n";
  out += std::string(err.offset(), ' ') + "^\n";
  out += err.what();
  return out;
}

}  // namespace serex
