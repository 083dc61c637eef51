#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "syzflip/corpus.hpp"
#include "syzflip/syzygy.hpp"

namespace syzflip {

struct KoszulCertificate {
  std::size_t i = 0;
  std::size_t j = 0;
  ModuleMembership membership;
};

struct KdReport {
  bool holds = false;
  /// Minimal syzygies with entries of degree <= 1.
  std::vector<SyzygyElement> linear_syzygies;
  /// One per pair i < j: F_j e_i - F_i e_j tested against the linear syzygies.
  std::vector<KoszulCertificate> koszul;
};

/// Condition (K_d): the Koszul relations among forms of degree d lie in the
/// submodule generated by linear syzygies.
KdReport check_kd(std::span<const Polynomial> forms, int d, const GroebnerOptions& options = {});

struct N2Report {
  bool quadric_generation = false;
  bool linear_first_syzygies = false;
  int normality_checked_to = 0;
  bool projectively_normal_in_range = false;
  /// Degrees k in [0, bound] where S/I -> H^0(O_X(k)) fails to be onto.
  std::vector<long> normality_failures;
  BettiTable betti;

  bool holds() const {
    return quadric_generation && linear_first_syzygies && projectively_normal_in_range;
  }
};

/// (N_2) up to a normality degree bound. The default bound (negative value)
/// is 2d + 2 with d the largest generator degree. Throws InvalidArgument with
/// code "unsaturated" for ideals that differ from their saturation.
N2Report check_n2(const Ideal& ideal, int normality_bound = -1,
                  const GroebnerOptions& options = {});

/// Forms restricted to the linear subspace {L_1 = ... = L_c = 0}.
struct Restriction {
  /// Coordinates of the subspace: the variables left free by the L_i.
  RingPtr ring;
  /// Image of each ambient variable.
  std::vector<Polynomial> embedding;
  std::vector<Polynomial> forms;
};

Restriction restrict_system(std::span<const Polynomial> forms,
                            std::span<const Polynomial> subspace);

/// A basis of the linear span of forms of one degree (zero forms dropped).
std::vector<Polynomial> span_basis(std::span<const Polynomial> forms);

/// Rank of the restriction of quadrics to the line through p and q.
std::size_t line_restriction_rank(std::span<const Polynomial> quadrics,
                                  std::span<const FieldElement> p,
                                  std::span<const FieldElement> q);

/// Rank of the matrix whose rows are the given points.
std::size_t point_rank(const std::vector<std::vector<FieldElement>>& points);

struct FourPointFailure {
  std::size_t trial = 0;
  std::vector<std::vector<FieldElement>> points;
  std::size_t rank = 0;
};

struct FourPointReport {
  bool all_passed = false;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<FourPointFailure> failures;
  /// Reduced points only: this never certifies 4-very-ampleness, and the
  /// flag additionally warns when the variety is known to contain conics.
  bool contains_conics = false;
  std::string note;
};

/// Samples 4 distinct points of X per trial from the registered
/// parametrization and checks they span a P^3. Throws InvalidArgument with
/// code "sampling_unavailable" without a parametrization.
FourPointReport four_point_span_check(const CorpusEntry& entry, std::size_t trials,
                                      std::uint64_t seed);

struct FanoChart {
  std::size_t i = 0;
  std::size_t j = 0;
  /// Reduced Groebner basis of the chart's ideal of lines on X.
  std::vector<Polynomial> ideal;
  bool empty = false;
};

struct FanoReport {
  bool contains_lines = false;
  std::vector<FanoChart> charts;
};

/// Lines on X through the affine charts of G(1, n): the line spanned by
/// e_i + sum a_k e_k and e_j + sum b_k e_k (k not in {i, j}). n <= 5.
FanoReport fano_lines(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace syzflip
