#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "syzflip/module_gb.hpp"
#include "syzflip/polynomial.hpp"

namespace syzflip {

/// Ideal given by generators in one ring. Zero generators are dropped.
class Ideal {
 public:
  explicit Ideal(RingPtr ring, std::vector<Polynomial> generators = {});

  static Ideal irrelevant(const RingPtr& ring);
  static Ideal unit(const RingPtr& ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_homogeneous() const noexcept;

  /// Same generators re-sorted in another ring with the same variables.
  Ideal in_ring(const RingPtr& target) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis of an ideal under its ring's order.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::vector<Monomial> leading_monomials() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const noexcept;
  Ideal ideal() const { return Ideal(ring_, elements_); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options = {});
/// The basis under `order`, computed in a copy of the ring carrying that order.
GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const GroebnerOptions& options = {});

Polynomial normal_form(const Polynomial& f, const Ideal& ideal,
                       const GroebnerOptions& options = {});
bool contains(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options = {});
bool contains(const Ideal& big, const Ideal& small, const GroebnerOptions& options = {});
bool equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options = {});

/// I ∩ k[x_first_block, ..., x_n], returned in a ring on the remaining variables.
Ideal eliminate(const Ideal& ideal, std::size_t first_block, const GroebnerOptions& options = {});

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& ideal, unsigned exponent);
Ideal intersect(std::span<const Ideal> ideals, const GroebnerOptions& options = {});
/// I : J, via the submodule of S^(m+1) generated by (g_1, ..., g_m, 1) and I e_j.
Ideal quotient(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options = {});
/// I : J^∞ by iterating quotients until the reduced basis stabilizes.
Ideal saturate(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options = {});

/// Relations among the images: the kernel of k[t_0..t_m] -> S/Q, t_i -> images[i],
/// computed by eliminating the source variables from the graph ideal.
/// `modulo` is the (optional) ideal Q of the target. Result lives in a fresh
/// ring with variables `prefix0 ... prefix{m}`.
Ideal kernel_of_map(std::span<const Polynomial> images, const Ideal* modulo = nullptr,
                    const std::string& prefix = "t", const GroebnerOptions& options = {});

/// Minimal homogeneous generators drawn greedily (by degree) from `ideal`'s generators.
Ideal minimalize(const Ideal& ideal, const GroebnerOptions& options = {});

}  // namespace syzflip
