#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syzflip/groebner.hpp"

namespace syzflip::cli {

struct InputModel {
  std::string ring_name;
  RingPtr ring;
  /// In declaration order.
  std::vector<std::pair<std::string, Ideal>> ideals;
  std::vector<std::pair<std::string, std::vector<FieldElement>>> points;

  /// Throws InvalidArgument with code "undeclared_name".
  const Ideal& ideal(const std::string& name) const;
  const std::vector<FieldElement>& point(const std::string& name) const;
};

/// Grammar:
///   ring <name> vars <v1> ... <vk>;
///   ideal <name> = p1, p2, ...;
///   point <name> = (c0 : c1 : ... : ck);
/// with `#` line comments. Throws ParseError with the position of the first
/// problem.
InputModel parse_input(std::string_view text, const Field& field = Field::rationals());

/// Text that parse_input reads back to an equal model.
std::string print_model(const InputModel& model);

/// Same generators with coefficients mapped into another field.
Ideal change_field(const Ideal& ideal, const RingPtr& target);

/// Parses `q` or `gfp:<p>`. Throws InvalidArgument with code "bad_field".
Field parse_field(const std::string& tag);
std::string field_tag(const Field& field);

}  // namespace syzflip::cli
