#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "syzflip/groebner.hpp"

namespace syzflip {

/// Homogeneous element of the graded free module ⊕ S(-shifts_i).
struct SyzygyElement {
  std::vector<Polynomial> entries;
  std::vector<int> shifts;
  /// Degree of every nonzero entry_i plus shift_i; 0 for the zero element.
  int degree = 0;

  bool is_zero() const;
  std::string to_string() const;
};

/// Builds an element and checks that the entries are homogeneous with
/// consistent twists.
SyzygyElement make_element(std::vector<Polynomial> entries, std::vector<int> shifts);

/// sum entries_i * generators_i.
Polynomial contract(const SyzygyElement& s, std::span<const Polynomial> generators);

/// Homogeneous map ⊕ S(-source_shifts) -> ⊕ S(-target_shifts); column i is
/// the image of the i-th basis vector.
struct GradedMap {
  std::vector<int> target_shifts;
  std::vector<int> source_shifts;
  std::vector<std::vector<Polynomial>> columns;
};

/// Graded Betti numbers beta_{i,j}: homological index i, internal degree j.
class BettiTable {
 public:
  long at(int i, int j) const;
  void add(int i, int j, long count = 1);
  long total(int i) const;
  /// Largest homological index with a nonzero entry; -1 when empty.
  int length() const;
  const std::map<std::pair<int, int>, long>& entries() const noexcept { return entries_; }
  /// Rows indexed by j - i, columns by i, as in the usual display.
  std::string to_string() const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, long> entries_;
};

/// Minimal graded free resolution of an ideal I: maps[0] is F_0 -> S with the
/// minimal generators, maps[i] is F_i -> F_{i-1}. Betti numbers are those of I.
struct Resolution {
  RingPtr ring;
  std::vector<GradedMap> maps;
  BettiTable betti;
};

/// Minimal generators of a graded submodule of ⊕ S(-shifts), chosen greedily
/// by degree from `vectors`.
std::vector<SyzygyElement> minimal_generators(const RingPtr& ring, const std::vector<int>& shifts,
                                              std::vector<SyzygyElement> vectors,
                                              const GroebnerOptions& options = {});

/// Minimal generators of the kernel of a graded map.
std::vector<SyzygyElement> kernel(const RingPtr& ring, const GradedMap& map,
                                  const GroebnerOptions& options = {});

/// Minimal generators of the first syzygy module of homogeneous forms.
std::vector<SyzygyElement> syzygies(std::span<const Polynomial> generators,
                                    const GroebnerOptions& options = {});

/// Computes F_0, ..., F_max_length (stopping early at a zero kernel).
Resolution free_resolution(const Ideal& ideal, int max_length = 3,
                           const GroebnerOptions& options = {});

struct ModuleMembership {
  bool member = false;
  /// v = sum coefficients_i * gens_i when member.
  std::vector<Polynomial> coefficients;
  /// Normal form of v modulo the submodule when not a member.
  std::vector<Polynomial> witness;
};

/// Membership tests against one fixed submodule, sharing a single Groebner
/// basis that tracks how its elements combine the generators.
class SubmoduleMembership {
 public:
  SubmoduleMembership(RingPtr ring, std::vector<int> shifts, std::vector<SyzygyElement> gens,
                      const GroebnerOptions& options = {});
  ModuleMembership test(const SyzygyElement& v) const;

 private:
  RingPtr ring_;
  std::vector<int> shifts_;
  std::size_t count_;
  ModuleGroebner engine_;
};

ModuleMembership module_member(const SyzygyElement& v, std::span<const SyzygyElement> gens,
                               const GroebnerOptions& options = {});

}  // namespace syzflip
