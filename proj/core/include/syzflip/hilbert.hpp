#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "syzflip/groebner.hpp"

namespace syzflip {

/// Hilbert series of S/I written as numerator / (1 - t)^nvars, together
/// with the projective dimension and degree read off the reduced form.
struct HilbertData {
  std::size_t nvars = 0;
  /// Coefficients of the numerator over (1 - t)^nvars.
  std::vector<mpz_class> numerator;
  /// Numerator after cancelling every factor (1 - t).
  std::vector<mpz_class> reduced_numerator;
  /// Krull dimension of S/I (pole order at t = 1).
  int affine_dimension = 0;
  /// Dimension of the projective scheme; -1 when it is empty.
  int dimension = -1;
  /// Reduced numerator at t = 1; zero when S/I = 0.
  mpz_class degree;

  /// dim_k (S/I)_k exactly.
  mpz_class hilbert_function(long k) const;
  /// Hilbert polynomial of S/I evaluated at k (any integer k).
  mpz_class hilbert_polynomial(long k) const;
};

/// Numerator N(t) of the Hilbert series of S/M for a monomial ideal M
/// (generators need not be minimal).
std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars);

HilbertData hilbert_data_from_numerator(std::vector<mpz_class> numerator, std::size_t nvars);
/// Uses the leading-term ideal of the reduced grevlex basis. Requires a
/// homogeneous ideal.
HilbertData hilbert_data(const Ideal& ideal, const GroebnerOptions& options = {});

/// Binomial coefficient C(n, k) as an integer-valued polynomial in n
/// (so it is meaningful for negative n); k >= 0.
mpz_class binomial_polynomial(long n, long k);
/// C(n, k) with the combinatorial convention: zero when n < k or n < 0.
mpz_class binomial(long n, long k);

}  // namespace syzflip
