#include "syzflip/parse.hpp"

#include <cctype>

#include "syzflip/error.hpp"

namespace syzflip {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      advance(1);
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Kind::Identifier, std::string(text.substr(i, j - i)), line, column});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Integer, std::string(text.substr(i, j - i)), line, column});
      advance(j - i);
    } else if (std::string_view("+-*^/(),;:=").find(static_cast<char>(c)) !=
               std::string_view::npos) {
      out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), line, column});
      advance(1);
    } else {
      throw ParseError("lexical_error", std::string("unexpected character '") + static_cast<char>(c) + "'",
                       line, column);
    }
  }
  out.push_back({Token::Kind::End, "", line, column});
  return out;
}

TokenStream::TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty() || tokens_.back().kind != Token::Kind::End) {
    tokens_.push_back({Token::Kind::End, "", 1, 1});
  }
}

const Token& TokenStream::peek(std::size_t ahead) const {
  return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenStream::at_symbol(char c) const {
  return peek().kind == Token::Kind::Symbol && peek().text[0] == c;
}

bool TokenStream::at_keyword(std::string_view word) const {
  return peek().kind == Token::Kind::Identifier && peek().text == word;
}

bool TokenStream::at_end() const { return peek().kind == Token::Kind::End; }

void TokenStream::expect_symbol(char c) {
  if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
  next();
}

std::string TokenStream::expect_identifier(std::string_view what) {
  if (peek().kind != Token::Kind::Identifier) fail("expected " + std::string(what));
  return next().text;
}

void TokenStream::fail(const std::string& message) const { fail("syntax_error", message); }

void TokenStream::fail(const std::string& code, const std::string& message) const {
  const Token& t = peek();
  const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
  throw ParseError(code, message + ", found " + found, t.line, t.column);
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(TokenStream& tokens, const RingPtr& ring) : ts_(tokens), ring_(ring) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (ts_.at_symbol('+') || ts_.at_symbol('-')) negate = ts_.next().text == "-";
    Polynomial t = term();
    acc = negate ? -t : t;
    while (ts_.at_symbol('+') || ts_.at_symbol('-')) {
      const bool minus = ts_.next().text == "-";
      Polynomial u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (ts_.at_symbol('*')) {
      ts_.next();
      acc *= factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (ts_.at_symbol('^')) {
      ts_.next();
      if (ts_.peek().kind != Token::Kind::Integer) ts_.fail("expected non-negative integer exponent");
      const std::string& digits = ts_.peek().text;
      if (digits.size() > 4) ts_.fail("exponent too large");
      const unsigned e = static_cast<unsigned>(std::stoul(ts_.next().text));
      base = base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = ts_.peek();
    if (t.kind == Token::Kind::Integer) {
      mpq_class q(mpz_class(ts_.next().text));
      if (ts_.at_symbol('/')) {
        ts_.next();
        if (ts_.peek().kind != Token::Kind::Integer) ts_.fail("expected integer denominator");
        mpz_class den(ts_.peek().text);
        if (den == 0) ts_.fail("zero denominator");
        ts_.next();
        q = mpq_class(q.get_num(), den);
        q.canonicalize();
      }
      return Polynomial::constant(ring_, FieldElement(ring_->field(), q));
    }
    if (t.kind == Token::Kind::Identifier) {
      const int index = ring_->index_of(t.text);
      if (index < 0) ts_.fail("undeclared_name", "undeclared variable");
      ts_.next();
      return Polynomial::variable(ring_, static_cast<std::size_t>(index));
    }
    if (ts_.at_symbol('(')) {
      ts_.next();
      Polynomial inner = expression();
      ts_.expect_symbol(')');
      return inner;
    }
    ts_.fail("expected coefficient, variable or '('");
  }

  TokenStream& ts_;
  const RingPtr& ring_;
};

}  // namespace

Polynomial parse_polynomial(TokenStream& tokens, const RingPtr& ring) {
  return PolynomialParser(tokens, ring).expression();
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  TokenStream ts(tokenize(text));
  Polynomial p = parse_polynomial(ts, ring);
  if (!ts.at_end()) ts.fail("unexpected trailing input");
  return p;
}

mpq_class parse_rational(TokenStream& tokens) {
  bool negative = false;
  if (tokens.at_symbol('+') || tokens.at_symbol('-')) negative = tokens.next().text == "-";
  if (tokens.peek().kind != Token::Kind::Integer) tokens.fail("expected integer");
  mpq_class q(mpz_class(tokens.next().text));
  if (tokens.at_symbol('/')) {
    tokens.next();
    if (tokens.peek().kind != Token::Kind::Integer) tokens.fail("expected integer denominator");
    mpz_class den(tokens.peek().text);
    if (den == 0) tokens.fail("zero denominator");
    tokens.next();
    q = mpq_class(q.get_num(), den);
    q.canonicalize();
  }
  return negative ? mpq_class(-q) : q;
}

}  // namespace syzflip
