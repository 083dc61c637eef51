#include "syzflip_cli/input.hpp"

#include <algorithm>
#include <charconv>

#include "syzflip/error.hpp"
#include "syzflip/parse.hpp"

namespace syzflip::cli {

namespace {

bool declared(const InputModel& m, const std::string& name) {
  if (name == m.ring_name) return true;
  auto same = [&](const auto& entry) { return entry.first == name; };
  return std::any_of(m.ideals.begin(), m.ideals.end(), same) ||
         std::any_of(m.points.begin(), m.points.end(), same);
}

std::string declare_name(TokenStream& ts, const InputModel& m, std::string_view what) {
  const Token t = ts.peek();
  std::string name = ts.expect_identifier(what);
  if (declared(m, name)) {
    throw ParseError("duplicate_name", "name '" + name + "' is already declared", t.line, t.column);
  }
  return name;
}

void parse_ring(TokenStream& ts, InputModel& m, const Field& field) {
  const Token start = ts.next();
  if (m.ring) throw ParseError("a ring is already declared", start.line, start.column);
  m.ring_name = declare_name(ts, m, "ring name");
  if (!ts.at_keyword("vars")) ts.fail("expected 'vars'");
  ts.next();
  std::vector<std::string> names;
  while (ts.peek().kind == Token::Kind::Identifier) {
    const Token t = ts.next();
    if (std::find(names.begin(), names.end(), t.text) != names.end()) {
      throw ParseError("duplicate_name", "variable '" + t.text + "' repeated", t.line, t.column);
    }
    names.push_back(t.text);
  }
  if (names.empty()) ts.fail("expected at least one variable");
  ts.expect_symbol(';');
  m.ring = Ring::make(std::move(names), field);
}

void require_ring(const TokenStream& ts, const InputModel& m) {
  if (!m.ring) ts.fail("undeclared_name", "no ring declared before this statement");
}

}  // namespace

const Ideal& InputModel::ideal(const std::string& name) const {
  for (const auto& [n, i] : ideals) {
    if (n == name) return i;
  }
  throw InvalidArgument("undeclared_name", "no ideal named '" + name + "'");
}

const std::vector<FieldElement>& InputModel::point(const std::string& name) const {
  for (const auto& [n, p] : points) {
    if (n == name) return p;
  }
  throw InvalidArgument("undeclared_name", "no point named '" + name + "'");
}

InputModel parse_input(std::string_view text, const Field& field) {
  TokenStream ts(tokenize(text));
  InputModel m;
  while (!ts.at_end()) {
    if (ts.at_keyword("ring")) {
      parse_ring(ts, m, field);
    } else if (ts.at_keyword("ideal")) {
      ts.next();
      require_ring(ts, m);
      std::string name = declare_name(ts, m, "ideal name");
      ts.expect_symbol('=');
      std::vector<Polynomial> gens;
      gens.push_back(parse_polynomial(ts, m.ring));
      while (ts.at_symbol(',')) {
        ts.next();
        gens.push_back(parse_polynomial(ts, m.ring));
      }
      ts.expect_symbol(';');
      m.ideals.emplace_back(std::move(name), Ideal(m.ring, std::move(gens)));
    } else if (ts.at_keyword("point")) {
      ts.next();
      require_ring(ts, m);
      std::string name = declare_name(ts, m, "point name");
      ts.expect_symbol('=');
      ts.expect_symbol('(');
      std::vector<FieldElement> coords;
      coords.emplace_back(field, parse_rational(ts));
      while (ts.at_symbol(':')) {
        ts.next();
        coords.emplace_back(field, parse_rational(ts));
      }
      if (coords.size() != m.ring->nvars()) {
        ts.fail("point needs " + std::to_string(m.ring->nvars()) + " coordinates, got " +
                std::to_string(coords.size()));
      }
      ts.expect_symbol(')');
      ts.expect_symbol(';');
      if (std::all_of(coords.begin(), coords.end(), [](const FieldElement& c) { return c.is_zero(); })) {
        throw InvalidArgument("zero_point", "point '" + name + "' has all coordinates zero");
      }
      m.points.emplace_back(std::move(name), std::move(coords));
    } else {
      ts.fail("expected 'ring', 'ideal' or 'point'");
    }
  }
  if (!m.ring) ts.fail("undeclared_name", "no ring declared");
  return m;
}

std::string print_model(const InputModel& model) {
  std::string out = "ring " + model.ring_name + " vars";
  for (const auto& name : model.ring->names()) out += " " + name;
  out += ";\n";
  for (const auto& [name, ideal] : model.ideals) {
    out += "ideal " + name + " =";
    if (ideal.generators().empty()) out += " 0";
    for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
      out += (i == 0 ? " " : ", ") + ideal.generators()[i].to_string();
    }
    out += ";\n";
  }
  for (const auto& [name, p] : model.points) {
    out += "point " + name + " = (";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i == 0 ? "" : " : ") + p[i].to_string();
    out += ");\n";
  }
  return out;
}

Ideal change_field(const Ideal& ideal, const RingPtr& target) {
  if (ideal.ring()->names() != target->names()) throw RingMismatch("change_field needs the same variables");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Term> terms;
    for (const auto& t : g.terms()) terms.push_back({t.mono, FieldElement(target->field(), t.coeff.to_rational())});
    gens.emplace_back(target, std::move(terms));
  }
  return Ideal(target, std::move(gens));
}

Field parse_field(const std::string& tag) {
  if (tag == "q") return Field::rationals();
  if (tag.rfind("gfp:", 0) == 0) {
    std::uint32_t p = 0;
    const char* first = tag.data() + 4;
    const char* last = tag.data() + tag.size();
    const auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last && first != last) {
      try {
        return Field::prime(p);
      } catch (const InvalidArgument& e) {
        throw InvalidArgument("bad_field", e.what());
      }
    }
  }
  throw InvalidArgument("bad_field", "field must be 'q' or 'gfp:<p>', got '" + tag + "'");
}

std::string field_tag(const Field& field) {
  return field.characteristic() == 0 ? "q" : "gfp:" + std::to_string(field.characteristic());
}

}  // namespace syzflip::cli
