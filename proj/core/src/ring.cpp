#include "syzflip/ring.hpp"

#include <set>

#include "syzflip/error.hpp"

namespace syzflip {

Ring::Ring(std::vector<std::string> names, Field field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {
  if (names_.size() > kMaxVariables) {
    throw InvalidArgument("too many ring variables: " + std::to_string(names_.size()));
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || !seen.insert(n).second) {
      throw InvalidArgument("ring variable names must be distinct and non-empty: '" + n + "'");
    }
  }
  if (order_.kind() == MonomialOrder::Kind::Block && order_.split() > names_.size()) {
    throw InvalidArgument("block order split " + std::to_string(order_.split()) +
                          " exceeds variable count " + std::to_string(names_.size()));
  }
}

RingPtr Ring::make(std::vector<std::string> names, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(names), field, order);
}

RingPtr Ring::make_indexed(const std::string& prefix, std::size_t count, Field field,
                           MonomialOrder order) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return make(std::move(names), field, order);
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(names_, field_, order); }

RingPtr Ring::with_field(Field field) const { return make(names_, field, order_); }

}  // namespace syzflip
