#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "syzflip/hilbert.hpp"
#include "syzflip/syzygy.hpp"

namespace syzflip {

/// A graded module S/J or J together with a minimal free resolution, able to
/// report Ext(M, S), local cohomology and sheaf cohomology degree by degree.
/// Local duality: dim H^j_m(M)_k = dim Ext^{N-j}(M, S)_{-k-N}, N = #variables.
class GradedModule {
 public:
  enum class Kind { Quotient, Ideal };

  /// S/J; the zero ideal gives S itself.
  static GradedModule quotient(const Ideal& ideal, const GroebnerOptions& options = {});
  /// J itself, viewed as a module.
  static GradedModule ideal(const Ideal& ideal, const GroebnerOptions& options = {});

  const RingPtr& ring() const noexcept { return ring_; }
  Kind kind() const noexcept { return kind_; }
  /// Twists of the free modules F_0, F_1, ... of the resolution of M.
  const std::vector<std::vector<int>>& free_shifts() const noexcept { return shifts_; }

  mpz_class hilbert_function(long k) const;
  mpz_class hilbert_polynomial(long k) const;
  long ext_dimension(int i, long degree) const;
  long local_cohomology(int j, long k) const;
  /// (h^0, ..., h^n) of the sheafified module twisted by k on P^n.
  std::vector<long> sheaf_cohomology(long k) const;

 private:
  GradedModule(RingPtr ring, Kind kind, HilbertData hilbert);
  long dual_rank(int i, long degree) const;
  long dual_dimension(int i, long degree) const;

  RingPtr ring_;
  Kind kind_;
  HilbertData hilbert_;
  std::vector<std::vector<int>> shifts_;
  std::vector<GradedMap> maps_;  // maps_[i] : F_{i+1} -> F_i
  mutable std::map<std::pair<int, long>, long> rank_cache_;
};

/// Saturation of I^a by the irrelevant ideal.
Ideal ideal_power_saturated(const Ideal& ideal, int a, const GroebnerOptions& options = {});

/// h^i(P^n, I~^a(k)) values with the Hilbert polynomial used for the Euler
/// characteristic check of each cell.
struct CohomologyCell {
  int a = 0;
  long k = 0;
  std::vector<long> h;
  mpz_class hilbert_polynomial;
  /// Saturated power's degree-k dimension.
  mpz_class ideal_dimension;
  bool euler_consistent = false;
  bool h0_consistent = false;
};

/// One cell for the sheafification of `module` (built from the saturated
/// power I^a) at twist k.
CohomologyCell cohomology_cell(const GradedModule& module, int a, long k);

struct CohomologyTable {
  int n = 0;
  std::uint64_t ideal_hash = 0;
  std::map<std::pair<int, long>, CohomologyCell> cells;  // keyed by (a, k)

  long at(int i, int a, long k) const;
};

/// Which vanishing statement a scan checks.
enum class VanishingVariant {
  /// k >= d(e + a - 1) - (n + 1), scanned on [bound, bound + window].
  Little,
  /// twist k = 2a - 1 for a > n - 3r - 1.
  Second,
};

struct VanishingViolation {
  int a = 0;
  long k = 0;
  int i = 0;
  long value = 0;
};

struct VanishingScan {
  VanishingVariant variant = VanishingVariant::Little;
  int n = 0;
  int r = 0;
  int e = 0;
  int d = 0;
  /// Per a: the first twist covered by the statement.
  std::map<int, long> bounds;
  /// Per a: whether the statement's hypothesis on a holds (always true for Little).
  std::map<int, bool> hypothesis;
  CohomologyTable table;
  /// Cells one below each bound, recorded for information only.
  std::vector<CohomologyCell> below_bound;
  std::vector<VanishingViolation> violations;
  /// Cells whose Euler characteristic or h^0 cross-check failed.
  std::vector<std::pair<int, long>> inconsistent;
};

VanishingScan vanishing_scan(const Ideal& ideal, int d, std::span<const int> a_values,
                             long window, VanishingVariant variant = VanishingVariant::Little,
                             const GroebnerOptions& options = {});

/// FNV-1a hash of the ideal's printed generators.
std::uint64_t ideal_hash(const Ideal& ideal);

}  // namespace syzflip
