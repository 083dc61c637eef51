#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "syzflip/polynomial.hpp"

namespace syzflip {

enum class Symbol { N, R, K };

/// Exact element of Q(n, r, k), kept as num/den with den monic (or 1).
class Scalar {
 public:
  Scalar();
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& value);  // NOLINT(google-explicit-constructor)
  Scalar(Polynomial num, Polynomial den);

  static Scalar symbol(Symbol s);
  /// The ring Q[n, r, k] holding numerators and denominators.
  static const RingPtr& ring();

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept;
  /// The rational value of a constant scalar.
  std::optional<mpq_class> value() const;
  /// Denominator 1 and numerator of degree at most 1.
  bool is_affine() const noexcept;

  /// Throws InvalidArgument with code "pole" when the denominator vanishes.
  mpq_class evaluate(const mpq_class& n, const mpq_class& r, const mpq_class& k) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws InvalidArgument with code "division_by_zero".
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// ASCII, e.g. `n-2r-2` or `(k+n-r-1)/(n-2r)`.
  std::string to_string() const;
  /// As to_string with U+2212 for minus signs.
  std::string display() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

enum class Space { BlownUpPn, M2tilde, M2 };

std::string to_string(Space space);

/// Coefficients over (H, E) on the blow-up and on M2, over (H, E1, E2) on M2tilde.
class DivisorClass {
 public:
  /// Throws InvalidArgument with code "coefficient_count".
  DivisorClass(Space space, std::vector<Scalar> coefficients);

  static DivisorClass zero(Space space);

  Space space() const noexcept { return space_; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_.at(i); }

  DivisorClass evaluate(const mpq_class& n, const mpq_class& r, const mpq_class& k) const;
  /// Scalar multiple of `other`, possibly by a rational function.
  bool proportional_to(const DivisorClass& other) const;

  /// `O(a, b, c)` in ASCII.
  std::string to_string() const;
  /// `O(a, b, c)` with U+2212 minus signs.
  std::string display() const;
  /// `3H−2E₁−E₂`, terms with zero coefficient omitted.
  std::string notation() const;
  /// `O_{M̃₂}(3H−2E₁−E₂)`.
  std::string sheaf() const;

  friend bool operator==(const DivisorClass& a, const DivisorClass& b);

 private:
  Space space_;
  std::vector<Scalar> coeffs_;
};

/// Throw InvalidArgument with code "space_mismatch" across spaces.
DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass subtract(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(const DivisorClass& a, const Scalar& q);
inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return add(a, b); }
inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return subtract(a, b); }
inline DivisorClass operator*(const Scalar& q, const DivisorClass& a) { return scale(a, q); }

/// BlownUpPn: (-n-1, n-r-1). M2tilde: (-n-1, n-r-1, n-2r-2). Throws
/// InvalidArgument with code "invalid_space" for M2.
DivisorClass canonical_class(Space space, const Scalar& n = Scalar::symbol(Symbol::N),
                             const Scalar& r = Scalar::symbol(Symbol::R));

/// n - 2r - 1 >= 2 for numeric n, r; symbolic arguments are assumed to satisfy it.
bool codimension_assumption(const Scalar& n, const Scalar& r);

/// (2k - 1, -k, -1) on M2tilde.
DivisorClass lk_class(const Scalar& k = Scalar::symbol(Symbol::K));

/// No effective bound on k is known in general; k = 3 is the case certified
/// when Sec X is cut out by cubics.
inline constexpr long kCertifiedFlipK = 3;

/// B = O(2k-1, -k, -2) on M2tilde.
DivisorClass kv_base(const Scalar& k = Scalar::symbol(Symbol::K));

struct KvRewrite {
  Scalar alpha;
  /// B - K.
  DivisorClass lhs;
  /// (n - 2r) L_alpha + O(2, 0, 0).
  DivisorClass rhs;
  bool holds = false;
};

/// Throws InvalidArgument with code "degenerate" when n = 2r.
KvRewrite kv_rewrite(const DivisorClass& base, const Scalar& n = Scalar::symbol(Symbol::N),
                     const Scalar& r = Scalar::symbol(Symbol::R), const Scalar& k = Scalar::symbol(Symbol::K));

bool verify_kv_rewrite();
bool verify_kv_rewrite(const DivisorClass& base);

/// (a, b) on M2 to (a, b, a + 2b) on M2tilde. Throws InvalidArgument with code
/// "space_mismatch" for other spaces.
DivisorClass pullback_h(const DivisorClass& c);
/// `h*O_{M₂}(aH+bE) = O_{M̃₂}(...)` for a class on M2.
std::string pullback_statement(const DivisorClass& c);

enum class ThresholdVariant { Little, Veronese, Second };

std::string to_string(ThresholdVariant variant);
/// Throws InvalidArgument with code "unknown_variant".
ThresholdVariant parse_threshold_variant(const std::string& name);

struct ThresholdParams {
  Scalar d = 2;
  Scalar e;
  Scalar a = 1;
  Scalar n;
  Scalar r;
};

struct ThresholdFormula {
  ThresholdVariant variant = ThresholdVariant::Little;
  ThresholdParams params;
  /// Variable the bound constrains: "k" for little and veronese, "a" for second.
  std::string subject;
  Scalar bound;
  bool strict = false;
  /// Second vanishing: the twist 2a - 1.
  std::optional<Scalar> twist;

  /// Whether a numeric value of the subject satisfies the bound. Throws
  /// InvalidArgument when the bound is symbolic.
  bool admits(const mpq_class& value) const;
  /// e.g. `k >= 0` or `a > 0`.
  std::string statement() const;
};

ThresholdFormula threshold(ThresholdVariant variant, const ThresholdParams& params);

}  // namespace syzflip
