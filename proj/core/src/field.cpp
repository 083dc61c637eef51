#include "syzflip/field.hpp"

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce_integer(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw InvalidArgument("field characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? std::string("q") : "gfp:" + std::to_string(p_);
}

FieldElement::FieldElement(const Field& field, long value)
    : prime_(field.characteristic()) {
  if (prime_ == 0) {
    q_ = value;
  } else {
    long r = value % static_cast<long>(prime_);
    if (r < 0) r += prime_;
    residue_ = static_cast<std::uint32_t>(r);
  }
}

FieldElement::FieldElement(const Field& field, const mpq_class& value)
    : prime_(field.characteristic()) {
  if (prime_ == 0) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint32_t den = reduce_integer(value.get_den(), prime_);
  if (den == 0) {
    throw InvalidArgument("denominator of " + value.get_str() + " vanishes modulo " +
                          std::to_string(prime_));
  }
  const std::uint64_t num = reduce_integer(value.get_num(), prime_);
  residue_ = static_cast<std::uint32_t>(num * pow_mod(den, prime_ - 2, prime_) % prime_);
}

Field FieldElement::field() const {
  return Field(prime_);
}

bool FieldElement::is_zero() const { return prime_ == 0 ? sgn(q_) == 0 : residue_ == 0; }

bool FieldElement::is_one() const { return prime_ == 0 ? q_ == 1 : residue_ == 1; }

mpq_class FieldElement::to_rational() const {
  return prime_ == 0 ? q_ : mpq_class(residue_);
}

void FieldElement::check_same(const FieldElement& other) const {
  if (prime_ != other.prime_) throw RingMismatch("field elements from different fields");
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (prime_ == 0) {
    r.q_ = -q_;
  } else if (residue_ != 0) {
    r.residue_ = prime_ - residue_;
  }
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  FieldElement r = *this;
  if (prime_ == 0) {
    r.q_ = 1 / q_;
  } else {
    r.residue_ = pow_mod(residue_, prime_ - 2, prime_);
  }
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same(other);
  if (prime_ == 0) {
    q_ += other.q_;
  } else {
    residue_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(residue_) + other.residue_) % prime_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  check_same(other);
  if (prime_ == 0) {
    q_ -= other.q_;
  } else {
    residue_ = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(residue_) + prime_ - other.residue_) % prime_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same(other);
  if (prime_ == 0) {
    q_ *= other.q_;
  } else {
    residue_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(residue_) *
                                          other.residue_ % prime_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  return *this *= other.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.prime_ != b.prime_) return false;
  return a.prime_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

std::string FieldElement::to_string() const {
  return prime_ == 0 ? q_.get_str() : std::to_string(residue_);
}

}  // namespace syzflip
