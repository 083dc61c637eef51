#pragma once

#include <stdexcept>
#include <string>

namespace syzflip {

/// Base class of every error raised by the library. `code()` is a stable,
/// machine-readable tag surfaced in CLI reports.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Operands live in different rings (or fields, or free modules).
class RingMismatch : public Error {
 public:
  explicit RingMismatch(const std::string& message) : Error("ring_mismatch", message) {}
};

/// A precondition on the arguments does not hold.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error("invalid_argument", message) {}
  InvalidArgument(std::string code, const std::string& message)
      : Error(std::move(code), message) {}
};

/// A Groebner computation produced a pair above the configured degree cap.
class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("degree_cap_exceeded",
              "S-pair degree " + std::to_string(degree) + " exceeds degree cap " +
                  std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}

  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }

 private:
  int degree_;
  int cap_;
};

/// Lexical or syntactic problem in textual input, with a 1-based position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : ParseError("syntax_error", message, line, column) {}
  /// Codes: "lexical_error", "syntax_error", "undeclared_name".
  ParseError(std::string code, const std::string& message, int line, int column)
      : Error(std::move(code), message + " at line " + std::to_string(line) + ", column " +
                                   std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace syzflip
