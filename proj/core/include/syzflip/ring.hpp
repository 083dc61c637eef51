#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "syzflip/field.hpp"
#include "syzflip/monomial.hpp"

namespace syzflip {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Graded polynomial ring k[x_0, ..., x_n] with named variables, a
/// coefficient field and a monomial order. Shared immutably by polynomials.
class Ring {
 public:
  Ring(std::vector<std::string> names, Field field, MonomialOrder order);

  static RingPtr make(std::vector<std::string> names, Field field = Field::rationals(),
                      MonomialOrder order = MonomialOrder::grevlex());
  /// Variables named `prefix0 ... prefix{count-1}`.
  static RingPtr make_indexed(const std::string& prefix, std::size_t count,
                              Field field = Field::rationals(),
                              MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const Field& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  RingPtr with_order(MonomialOrder order) const;
  RingPtr with_field(Field field) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.names_ == b.names_ && a.field_ == b.field_ && a.order_ == b.order_;
  }

 private:
  std::vector<std::string> names_;
  Field field_;
  MonomialOrder order_;
};

/// Pointer-or-structural ring equality.
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

}  // namespace syzflip
