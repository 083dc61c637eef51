#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "syzflip/groebner.hpp"
#include "syzflip/random.hpp"

namespace syzflip {

/// A map P^m -> P^n given by forms of one degree in k[s_0..s_m].
struct Parametrization {
  RingPtr source;
  std::vector<Polynomial> forms;

  std::vector<FieldElement> evaluate(std::span<const FieldElement> parameters) const;
  /// Image of a random parameter vector with entries in [-range, range];
  /// resamples until the image is a point (not all coordinates zero).
  std::vector<FieldElement> sample(SeededRng& rng, long range = 20) const;
};

/// What is known about lines and conics on a corpus variety.
enum class Certificate { Absent, Present, Unknown };

std::string to_string(Certificate c);

struct CorpusEntry {
  std::string family;
  /// Canonical name such as `rational-normal-curve(4)`.
  std::string name;
  Ideal ideal;
  /// Degree of the generators.
  int generator_degree = 2;
  std::optional<Parametrization> parametrization;
  Certificate lines = Certificate::Unknown;
  Certificate conics = Certificate::Unknown;
  /// Reason behind the certificates.
  std::string certificate_note;
  /// Only meaningful for complete intersections: singular locus is empty.
  std::optional<bool> smooth;
};

/// Desk-scale cap on the number of ambient variables.
inline constexpr std::size_t kCorpusMaxVariables = 12;

/// 2x2 minors of the 2 x d Hankel matrix in P^d.
CorpusEntry rational_normal_curve(int d, const Field& field = Field::rationals());
/// v_d(P^n): minimal binomial quadrics among the degree-d monomials.
CorpusEntry veronese(int n, int d, const Field& field = Field::rationals());
/// P^a x P^b: 2x2 minors of the generic (a+1) x (b+1) matrix.
CorpusEntry segre(int a, int b, const Field& field = Field::rationals());
/// Dense seeded random forms of the given degrees in P^n. When a seed gives a
/// singular intersection, the next derived stream is tried (up to 16 times).
CorpusEntry complete_intersection(std::vector<int> degrees, std::uint64_t seed, int n = 3,
                                  const Field& field = Field::rationals());

/// Singular locus of the complete intersection of `forms` is empty.
bool is_smooth_complete_intersection(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace syzflip
