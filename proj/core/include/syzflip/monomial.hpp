#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace syzflip {

/// Upper bound on ring variables. Secant joins double the variable count of
/// the ambient space, so this leaves room for P^19 inputs.
inline constexpr std::size_t kMaxVariables = 40;

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return nvars_; }
  int degree() const noexcept { return static_cast<int>(degree_); }
  int operator[](std::size_t i) const noexcept { return exp_[i]; }
  std::vector<int> exponents() const;

  bool is_one() const noexcept { return degree_ == 0; }
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; the divisor must divide.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

/// Every monomial of the given total degree, exponent vectors in decreasing
/// lexicographic order; empty for negative degrees.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// Monomial orders are stored as a sequence of grevlex blocks: lex is a block
/// per variable, grevlex a single block, and an elimination order two blocks.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  /// Grevlex on the first `split` variables, then grevlex on the rest.
  static MonomialOrder block(std::size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const noexcept { return kind_; }
  std::size_t split() const noexcept { return split_; }
  /// Every block is compared by total degree first only for grevlex.
  bool is_degree_compatible() const noexcept { return kind_ == Kind::Grevlex; }

  /// Throws InvalidArgument on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  /// Unchecked variant used in hot loops.
  int cmp(const Monomial& a, const Monomial& b) const noexcept;

  std::string to_string() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

  Kind kind_;
  std::size_t split_;
};

}  // namespace syzflip
