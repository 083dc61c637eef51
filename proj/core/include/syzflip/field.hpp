#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace syzflip {

/// Coefficient field: the rationals or a prime field GF(p) with p < 2^31.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  Field() = default;
  static Field rationals() { return Field(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class FieldElement;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An exact scalar. Rationals are kept canonical (reduced, positive
/// denominator) by GMP; prime-field values are kept in [0, p).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& field, long value);
  FieldElement(const Field& field, const mpq_class& value);

  static FieldElement zero(const Field& field) { return FieldElement(field, 0L); }
  static FieldElement one(const Field& field) { return FieldElement(field, 1L); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// The value as a rational (the canonical representative for GF(p)).
  mpq_class to_rational() const;
  std::uint32_t residue() const noexcept { return residue_; }
  const mpq_class& rational() const noexcept { return q_; }

  FieldElement operator-() const;
  FieldElement inverse() const;  // throws InvalidArgument on zero

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Decimal form, `num/den` for non-integral rationals.
  std::string to_string() const;

 private:
  void check_same(const FieldElement& other) const;

  std::uint32_t prime_ = 0;  // 0 selects the rationals
  std::uint32_t residue_ = 0;
  mpq_class q_;
};

}  // namespace syzflip
