#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qlie/freeprod.hpp"

namespace qlie {

// Surface syntax for elements of Q(L) and Q(<L,x>):
//   expr    := term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := unary ('^' INT)*
//   unary   := '-' unary | primary
//   primary := NUMBER | IDENT | '(' expr ')' | '[' expr ',' expr ']'
// Numbers are decimal integers or num/den rationals; identifiers are basis
// names; 'x' is the reserved formal variable. Unary minus binds tighter than
// '^', and exponents are literal non-negative integers.

struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t col = 1;
  std::string str() const { return std::to_string(line) + ":" + std::to_string(col); }
};

struct parse_error : input_error {
  parse_error(const std::string& msg, SourcePos pos) : input_error(msg + " at " + pos.str()), where(pos) {}
  SourcePos where;
};

struct Expression {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Pow, Commutator };
  Kind kind;
  SourcePos pos;
  std::string text;       // Number literal / identifier name
  std::uint32_t exponent = 0;
  std::unique_ptr<Expression> lhs, rhs;
};

using ExprPtr = std::unique_ptr<Expression>;

namespace detail {

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
  TokKind kind;
  std::string text;
  SourcePos pos;
};

inline std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t t = 0; t < k; ++t, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
    }
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    SourcePos start = pos;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j < src.size() && src[j] == '/') {
        std::size_t k = j + 1;
        while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
        if (k == j + 1) throw parse_error("expected digits after '/' in a rational literal", start);
        j = k;
      }
      out.push_back({TokKind::Number, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({TokKind::Ident, std::string(src.substr(i, j - i)), start});
      advance(j - i);
      continue;
    }
    TokKind k;
    switch (ch) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '^': k = TokKind::Caret; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      case '[': k = TokKind::LBracket; break;
      case ']': k = TokKind::RBracket; break;
      case ',': k = TokKind::Comma; break;
      default:
        throw parse_error(std::string("unexpected character '") + ch + "'", start);
    }
    out.push_back({k, std::string(1, ch), start});
    advance(1);
  }
  out.push_back({TokKind::End, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    expect(TokKind::End, "end of input");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  void expect(TokKind k, const std::string& what) {
    if (peek().kind != k)
      throw parse_error("expected " + what + ", found '" + (peek().kind == TokKind::End ? "end of input" : peek().text) + "'",
                        peek().pos);
    take();
  }

  static ExprPtr node(Expression::Kind k, SourcePos pos) {
    auto e = std::make_unique<Expression>();
    e->kind = k;
    e->pos = pos;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      Token op = take();
      ExprPtr e = node(op.kind == TokKind::Plus ? Expression::Kind::Add : Expression::Kind::Sub, op.pos);
      e->lhs = std::move(lhs);
      e->rhs = term();
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (peek().kind == TokKind::Star) {
      Token op = take();
      ExprPtr e = node(Expression::Kind::Mul, op.pos);
      e->lhs = std::move(lhs);
      e->rhs = factor();
      lhs = std::move(e);
    }
    return lhs;
  }

  ExprPtr factor() {
    ExprPtr base = unary();
    while (peek().kind == TokKind::Caret) {
      Token op = take();
      if (peek().kind == TokKind::Minus) throw parse_error("negative exponent", peek().pos);
      if (peek().kind != TokKind::Number || peek().text.find('/') != std::string::npos)
        throw parse_error("expected a non-negative integer exponent", peek().pos);
      Token num = take();
      unsigned long long v;
      try {
        v = std::stoull(num.text);
      } catch (const std::exception&) {
        throw parse_error("exponent out of range", num.pos);
      }
      if (v > 1'000'000) throw parse_error("exponent out of range", num.pos);
      ExprPtr e = node(Expression::Kind::Pow, op.pos);
      e->lhs = std::move(base);
      e->exponent = static_cast<std::uint32_t>(v);
      base = std::move(e);
    }
    return base;
  }

  ExprPtr unary() {
    if (peek().kind == TokKind::Minus) {
      Token op = take();
      ExprPtr e = node(Expression::Kind::Neg, op.pos);
      e->lhs = unary();
      return e;
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Number: {
        Token tok = take();
        ExprPtr e = node(Expression::Kind::Number, tok.pos);
        e->text = tok.text;
        return e;
      }
      case TokKind::Ident: {
        Token tok = take();
        ExprPtr e = node(Expression::Kind::Ident, tok.pos);
        e->text = tok.text;
        return e;
      }
      case TokKind::LParen: {
        take();
        ExprPtr e = expr();
        expect(TokKind::RParen, "')'");
        return e;
      }
      case TokKind::LBracket: {
        Token tok = take();
        ExprPtr e = node(Expression::Kind::Commutator, tok.pos);
        e->lhs = expr();
        expect(TokKind::Comma, "','");
        e->rhs = expr();
        expect(TokKind::RBracket, "']'");
        return e;
      }
      default:
        throw parse_error("expected a number, identifier, '(', or '['", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline ExprPtr parse_expression(std::string_view src) {
  return detail::Parser(detail::lex(src)).parse();
}

inline FPElement evaluate(const FreeProduct& A, const Expression& e) {
  switch (e.kind) {
    case Expression::Kind::Number:
      try {
        return A.scalar(Scalar::parse(e.text, A.field()));
      } catch (const input_error& err) {
        throw parse_error(err.what(), e.pos);
      }
    case Expression::Kind::Ident: {
      if (e.text == "x") return A.x_gen();
      const auto& names = A.env().presentation().basis_names;
      for (std::uint32_t i = 0; i < names.size(); ++i)
        if (names[i] == e.text)
          return A.inject_env(A.env().embed_lie(A.env().presentation().basis_element(i)));
      throw parse_error("unbound identifier '" + e.text + "'", e.pos);
    }
    case Expression::Kind::Neg:
      return fp_scale(-Scalar::one(A.field()), evaluate(A, *e.lhs));
    case Expression::Kind::Add:
      return fp_add(evaluate(A, *e.lhs), evaluate(A, *e.rhs));
    case Expression::Kind::Sub:
      return fp_sub(evaluate(A, *e.lhs), evaluate(A, *e.rhs));
    case Expression::Kind::Mul:
      return A.multiply(evaluate(A, *e.lhs), evaluate(A, *e.rhs));
    case Expression::Kind::Pow:
      return A.power(evaluate(A, *e.lhs), e.exponent);
    case Expression::Kind::Commutator:
      return A.commutator(evaluate(A, *e.lhs), evaluate(A, *e.rhs));
  }
  throw std::logic_error("unreachable expression kind");
}

inline FPElement evaluate_expression(const FreeProduct& A, std::string_view src) {
  return evaluate(A, *parse_expression(src));
}

}  // namespace qlie
