#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzflip/field.hpp"
#include "syzflip/monomial.hpp"
#include "syzflip/ring.hpp"

namespace syzflip {

struct Term {
  Monomial mono;
  FieldElement coeff;
};

/// Sparse polynomial. Terms are strictly decreasing in the ring's order and
/// carry no zero coefficients. Arithmetic returns fresh values.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  /// Sorts and combines arbitrary terms; zero coefficients are dropped.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const FieldElement& c);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Largest term under the ring order. Throws InvalidArgument on zero.
  std::pair<Monomial, FieldElement> leading_data() const;
  const Monomial& leading_monomial() const;
  const FieldElement& leading_coeff() const;

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const FieldElement& c) const;
  Polynomial mul_term(const Monomial& m, const FieldElement& c) const;
  Polynomial pow(unsigned exponent) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  FieldElement evaluate(std::span<const FieldElement> point) const;
  /// Replaces x_i by images[i]; all images share one (target) ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// The same polynomial re-sorted in another order on the same variables.
  Polynomial in_ring(const RingPtr& target) const;

  /// Homogeneous component of the given degree.
  Polynomial homogeneous_part(int degree) const;

  /// Text in the input grammar, e.g. `2/3*x0^2*x1 - x2 + 5`.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_ring(const Polynomial& other) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient of `f` by `g` via the division algorithm; throws
/// InvalidArgument when the remainder is nonzero.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace syzflip
