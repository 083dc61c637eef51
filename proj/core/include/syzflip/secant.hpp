#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "syzflip/groebner.hpp"
#include "syzflip/hilbert.hpp"

namespace syzflip {

/// Ideal of the secant variety: the x-block is eliminated from
/// I(x) + I(z - x) in k[x, z], then the result is saturated by the irrelevant
/// ideal. Output lives in a ring with the input's variable names.
Ideal secant_ideal(const Ideal& ideal, const GroebnerOptions& options = {});

struct SecantReport {
  Ideal secant;
  int r = 0;
  int n = 0;
  int secant_dimension = 0;
  /// 2r + 1 - dim Sec X.
  int deficiency = 0;
  /// Sec X = P^n: the ideal is zero and its degree is not reported.
  bool fills_space = false;
  std::optional<mpz_class> secant_degree;
  bool generated_in_degree_le_3 = false;
  /// Degree-2 part of the ideal of X, the system defining the quadric map.
  std::vector<Polynomial> quadrics;
  /// Ideal of the closure of the image of Sec X under the quadrics.
  Ideal image;
  int image_dimension = 0;
  /// 2 * deficiency == 2r - dim Y.
  bool formula_consistent = false;
};

/// Throws InvalidArgument with code "no_quadrics" when the ideal has no
/// quadrics.
SecantReport secant_report(const Ideal& ideal, const GroebnerOptions& options = {});

/// A basis of the degree-2 part of a homogeneous ideal.
std::vector<Polynomial> quadrics_of(const Ideal& ideal, const GroebnerOptions& options = {});

/// Closure of the fiber of the map given by `forms` through p:
/// (F_i(z) F_j(p) - F_j(z) F_i(p)) saturated by the base locus and by the
/// irrelevant ideal. Throws InvalidArgument with code "base_point" when p is a
/// base point.
Ideal fiber_ideal(std::span<const Polynomial> forms, std::span<const FieldElement> p,
                  const GroebnerOptions& options = {});

struct FiberAnalysis {
  Ideal fiber;
  HilbertData fiber_data;
  /// Minimal generators of the fiber ideal are linear forms.
  bool linear = false;
  /// Fiber intersected with the base locus (the variety X).
  HilbertData intersection_data;
  /// A reduced point (necessarily p), or a linear P^k, k >= 1, meeting X in a
  /// hypersurface of degree d. Anything else is a violation.
  enum class Kind { ReducedPoint, LinearSpace, Other } kind = Kind::Other;
};

std::string to_string(FiberAnalysis::Kind kind);

FiberAnalysis analyze_fiber(std::span<const Polynomial> forms, std::span<const FieldElement> p,
                            int d, const GroebnerOptions& options = {});

/// Every minimal generator has degree at most 3.
bool cubic_generation(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace syzflip
