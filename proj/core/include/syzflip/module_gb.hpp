#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "syzflip/polynomial.hpp"

namespace syzflip {

/// Limits shared by every Groebner-based computation.
struct GroebnerOptions {
  /// Abort with DegreeCapExceeded once an S-pair of larger sugar degree is selected.
  int degree_cap = 40;
};

/// Term m * e_comp of a free module.
struct ModuleTerm {
  Monomial mono;
  std::uint32_t comp;
  FieldElement coeff;
};

/// Terms sorted strictly decreasing under a ModuleOrder.
using ModuleVector = std::vector<ModuleTerm>;

/// Order on terms of the free module F = ⊕ S(-shift_i).
///
/// Components below `eliminated` form a block that dominates everything
/// else, so a basis element whose leading term lies outside that block has no
/// terms inside it. Within each block the order is term-over-position: the
/// shifted degree (for degree-compatible base orders), then the base order
/// on monomials, then the component with lower indices larger.
class ModuleOrder {
 public:
  ModuleOrder(MonomialOrder base, std::vector<int> shifts, std::size_t eliminated = 0);

  const MonomialOrder& base() const noexcept { return base_; }
  const std::vector<int>& shifts() const noexcept { return shifts_; }
  std::size_t rank() const noexcept { return shifts_.size(); }
  std::size_t eliminated() const noexcept { return eliminated_; }

  int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const noexcept;
  int cmp(const ModuleTerm& a, const ModuleTerm& b) const noexcept {
    return cmp(a.mono, a.comp, b.mono, b.comp);
  }
  int degree(const ModuleTerm& t) const noexcept { return t.mono.degree() + shifts_[t.comp]; }

 private:
  MonomialOrder base_;
  std::vector<int> shifts_;
  std::size_t eliminated_;
};

/// Packs per-component polynomials into one sorted module vector.
ModuleVector to_module_vector(std::span<const Polynomial> entries, const ModuleOrder& order);
/// Splits a module vector into `rank` polynomials over `ring`.
std::vector<Polynomial> from_module_vector(const ModuleVector& v, const RingPtr& ring,
                                           std::size_t rank);

/// Buchberger's algorithm for submodules of a free module, with the
/// Gebauer-Moeller pair criteria (the coprime-leading-term criterion only in
/// rank one) and the sugar selection strategy. Pair selection ties are broken
/// by the lcm term, then by basis indices, so runs are deterministic.
///
/// Generators may be added after `run()`; the next `run()` only processes the
/// new pairs, which makes incremental membership tests cheap.
class ModuleGroebner {
 public:
  ModuleGroebner(RingPtr ring, ModuleOrder order, GroebnerOptions options = {});

  const ModuleOrder& order() const noexcept { return order_; }
  const RingPtr& ring() const noexcept { return ring_; }

  /// Queues a generator; zero vectors are ignored.
  void add(ModuleVector v);
  void run();

  /// Reduced basis (monic, interreduced), sorted by increasing leading term.
  std::vector<ModuleVector> reduced_basis() const;
  /// Full normal form of `v` against the current basis. Valid after run().
  ModuleVector normal_form(ModuleVector v) const;
  bool reduces_to_zero(ModuleVector v) const { return normal_form(std::move(v)).empty(); }

 private:
  struct Element {
    ModuleVector vec;
    int sugar;
    bool redundant = false;
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint32_t comp;
    int sugar;
  };

  const Element* find_reducer(const ModuleTerm& t, std::size_t skip) const;
  ModuleVector reduce(ModuleVector v, int& sugar, bool full, std::size_t skip) const;
  void insert(ModuleVector v, int sugar);
  int initial_sugar(const ModuleVector& v) const;
  ModuleVector spoly(const Pair& p, int& sugar) const;

  RingPtr ring_;
  ModuleOrder order_;
  GroebnerOptions options_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
  std::vector<ModuleVector> pending_;
};

}  // namespace syzflip
