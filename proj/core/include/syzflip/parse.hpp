#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "syzflip/polynomial.hpp"

namespace syzflip {

struct Token {
  enum class Kind { Identifier, Integer, Symbol, End };
  Kind kind;
  std::string text;
  int line;
  int column;
};

/// Splits text into identifiers, unsigned integers and one-character
/// symbols. `#` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

/// Cursor over a token vector with error helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens);

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_symbol(char c) const;
  bool at_keyword(std::string_view word) const;
  bool at_end() const;

  void expect_symbol(char c);
  std::string expect_identifier(std::string_view what);
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] void fail(const std::string& code, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

/// Parses one polynomial expression from the stream, stopping before the
/// first token that cannot continue it.
Polynomial parse_polynomial(TokenStream& tokens, const RingPtr& ring);
/// Parses a complete polynomial; trailing input is an error.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Parses `n` or `n/d` (with optional leading sign) as a rational.
mpq_class parse_rational(TokenStream& tokens);

}  // namespace syzflip
