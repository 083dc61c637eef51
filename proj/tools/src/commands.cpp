#include "syzflip_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <concepts>
#include <cstdio>
#include <functional>
#include <map>

#include "syzflip/cohomology.hpp"
#include "syzflip/conditions.hpp"
#include "syzflip/error.hpp"
#include "syzflip/flipcalc.hpp"
#include "syzflip/hilbert.hpp"
#include "syzflip/random.hpp"
#include "syzflip/secant.hpp"
#include "syzflip/syzygy.hpp"
#include "syzflip_cli/input.hpp"

#ifndef SYZFLIP_VERSION
#define SYZFLIP_VERSION "0.0.0"
#endif

namespace syzflip::cli {

namespace {

using json = nlohmann::json;

template <std::integral T>
json num(T v) {
  return std::to_string(v);
}
json num(const mpz_class& v) { return v.get_str(); }

json polys(std::span<const Polynomial> ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json coords(std::span<const FieldElement> p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

json ints(const std::vector<long>& values) {
  json out = json::array();
  for (long v : values) out.push_back(num(v));
  return out;
}

json hilbert_json(const HilbertData& h) {
  return {{"affine_dimension", num(h.affine_dimension)},
          {"degree", num(h.degree)},
          {"dimension", num(h.dimension)}};
}

json betti_json(const BettiTable& b) {
  json entries = json::array();
  for (const auto& [key, value] : b.entries()) {
    entries.push_back({{"i", num(key.first)}, {"j", num(key.second)}, {"value", num(value)}});
  }
  json totals = json::array();
  for (int i = 0; i <= b.length(); ++i) totals.push_back(num(b.total(i)));
  return {{"display", b.to_string()}, {"entries", entries}, {"length", num(b.length())}, {"totals", totals}};
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct Section {
  json result = json::object();
  std::vector<std::string> violations;
};

struct Context {
  const CommandOptions& opt;
  GroebnerOptions gb;
};

void require_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) {
    throw InvalidArgument("inhomogeneous", "this command needs homogeneous generators");
  }
}

std::vector<Polynomial> minimal_forms(const Ideal& ideal, const Context& ctx) {
  return minimalize(ideal, ctx.gb).generators();
}

int top_degree(const std::vector<Polynomial>& forms) {
  int d = 0;
  for (const auto& f : forms) d = std::max(d, f.degree());
  return d;
}

// ---- single-ideal sections ----

Section gb_section(const Ideal& ideal, const Context& ctx) {
  MonomialOrder order = MonomialOrder::grevlex();
  if (ctx.opt.order == "lex") {
    order = MonomialOrder::lex();
  } else if (ctx.opt.order != "grevlex") {
    throw InvalidArgument("bad_order", "order must be 'grevlex' or 'lex'");
  }
  const GroebnerBasis gb = groebner_basis(ideal, order, ctx.gb);
  json leading = json::array();
  const FieldElement one = FieldElement::one(gb.ring()->field());
  for (const auto& m : gb.leading_monomials()) leading.push_back(Polynomial::monomial(gb.ring(), m, one).to_string());
  Section s;
  s.result = {{"basis", polys(gb.elements())},
              {"leading_monomials", leading},
              {"order", ctx.opt.order},
              {"size", num(gb.elements().size())},
              {"unit", gb.is_unit()}};
  return s;
}

Section syz_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const auto& gens = ideal.generators();
  const auto syz = syzygies(gens, ctx.gb);
  bool verified = true;
  json list = json::array();
  for (const auto& z : syz) {
    verified = verified && contract(z, gens).is_zero();
    list.push_back({{"degree", num(z.degree)}, {"entries", polys(z.entries)}});
  }
  Section s;
  s.result = {{"contraction_verified", verified},
              {"count", num(syz.size())},
              {"generators", polys(gens)},
              {"syzygies", list}};
  if (!verified) s.violations.push_back("syzygy_contraction");
  return s;
}

Section betti_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const Resolution res = free_resolution(ideal, static_cast<int>(ideal.nvars()), ctx.gb);
  Section s;
  s.result = betti_json(res.betti);
  return s;
}

Section kd_section(const Ideal& ideal, std::optional<int> degree, const Context& ctx) {
  require_homogeneous(ideal);
  const auto forms = minimal_forms(ideal, ctx);
  const int d = degree.value_or(top_degree(forms));
  const KdReport kd = check_kd(forms, d, ctx.gb);
  json koszul = json::array();
  std::size_t failures = 0;
  for (const auto& c : kd.koszul) {
    koszul.push_back({{"i", num(c.i)}, {"j", num(c.j)}, {"member", c.membership.member}});
    if (!c.membership.member) ++failures;
  }
  Section s;
  s.result = {{"d", num(d)},
              {"failures", num(failures)},
              {"generators", polys(forms)},
              {"holds", kd.holds},
              {"koszul", koszul},
              {"linear_syzygies", num(kd.linear_syzygies.size())}};
  if (!kd.holds) s.violations.push_back("condition_fails");
  return s;
}

Section n2_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const N2Report n2 = check_n2(ideal, ctx.opt.normality_bound, ctx.gb);
  Section s;
  s.result = {{"betti", betti_json(n2.betti)},
              {"holds", n2.holds()},
              {"linear_first_syzygies", n2.linear_first_syzygies},
              {"normality_checked_to", num(n2.normality_checked_to)},
              {"normality_failures", ints(n2.normality_failures)},
              {"projectively_normal_in_range", n2.projectively_normal_in_range},
              {"quadric_generation", n2.quadric_generation}};
  if (!n2.holds()) s.violations.push_back("condition_fails");
  return s;
}

Section lines_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const FanoReport f = fano_lines(ideal, ctx.gb);
  json charts = json::array();
  for (const auto& c : f.charts) {
    charts.push_back({{"empty", c.empty}, {"i", num(c.i)}, {"ideal", polys(c.ideal)}, {"j", num(c.j)}});
  }
  Section s;
  s.result = {{"charts", charts}, {"contains_lines", f.contains_lines}};
  return s;
}

json secant_json(const Ideal& sec, const HilbertData& h, bool cubic) {
  return {{"degree", sec.is_zero() ? json(nullptr) : num(h.degree)},
          {"dimension", num(h.dimension)},
          {"fills_space", sec.is_zero()},
          {"generated_in_degree_le_3", cubic},
          {"generators", polys(sec.generators())}};
}

Section secant_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const Ideal sec = secant_ideal(ideal, ctx.gb);
  Section s;
  s.result = secant_json(sec, hilbert_data(sec, ctx.gb), cubic_generation(sec, ctx.gb));
  return s;
}

json deficiency_json(const SecantReport& r) {
  return {{"deficiency", num(r.deficiency)},
          {"formula_consistent", r.formula_consistent},
          {"image", polys(r.image.generators())},
          {"image_dimension", num(r.image_dimension)},
          {"n", num(r.n)},
          {"quadrics", num(r.quadrics.size())},
          {"r", num(r.r)},
          {"secant_dimension", num(r.secant_dimension)}};
}

Section deficiency_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const SecantReport r = secant_report(ideal, ctx.gb);
  Section s;
  s.result = deficiency_json(r);
  s.result["secant"] = polys(r.secant.generators());
  if (!r.formula_consistent) s.violations.push_back("deficiency_formula");
  return s;
}

json fiber_json(const FiberAnalysis& f) {
  return {{"fiber", polys(f.fiber.generators())},
          {"fiber_hilbert", hilbert_json(f.fiber_data)},
          {"intersection_hilbert", hilbert_json(f.intersection_data)},
          {"kind", to_string(f.kind)},
          {"linear", f.linear}};
}

Section fiber_section(const Ideal& ideal, std::span<const FieldElement> p, const Context& ctx) {
  require_homogeneous(ideal);
  const auto v = quadrics_of(ideal, ctx.gb);
  if (v.empty()) throw InvalidArgument("no_quadrics", "the ideal contains no quadrics");
  const FiberAnalysis f = analyze_fiber(v, p, 2, ctx.gb);
  Section s;
  s.result = fiber_json(f);
  s.result["point"] = coords(p);
  if (f.kind == FiberAnalysis::Kind::Other) s.violations.push_back("fiber_dichotomy");
  return s;
}

json cell_json(const CohomologyCell& c) {
  return {{"a", num(c.a)},
          {"euler_consistent", c.euler_consistent},
          {"h", ints(c.h)},
          {"h0_consistent", c.h0_consistent},
          {"hilbert_polynomial", num(c.hilbert_polynomial)},
          {"k", num(c.k)}};
}

Section cohomology_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const CommandOptions& o = ctx.opt;
  if (o.twist_high < o.twist_low || o.twist_high - o.twist_low > 200) {
    throw InvalidArgument("bad_twists", "twist range must be nonempty and at most 200 wide");
  }
  Section s;
  json tables = json::array();
  bool consistent = true;
  for (int a : o.powers) {
    if (a < 1) throw InvalidArgument("bad_power", "powers must be positive");
    const GradedModule m = GradedModule::ideal(ideal_power_saturated(ideal, a, ctx.gb), ctx.gb);
    json cells = json::array();
    for (long k = o.twist_low; k <= o.twist_high; ++k) {
      const CohomologyCell c = cohomology_cell(m, a, k);
      consistent = consistent && c.euler_consistent && c.h0_consistent;
      cells.push_back(cell_json(c));
    }
    tables.push_back({{"a", num(a)}, {"cells", cells}});
  }
  s.result = {{"consistent", consistent}, {"n", num(ideal.nvars() - 1)}, {"tables", tables}};
  if (!consistent) s.violations.push_back("euler");
  return s;
}

struct Hypotheses {
  bool kd = false;
  std::optional<bool> lines;
  bool applicable() const { return kd && lines != true; }
  json to_json() const {
    return {{"contains_lines", lines ? json(*lines) : json(nullptr)},
            {"k_d", kd},
            {"smooth", "unchecked"}};
  }
};

Hypotheses scan_hypotheses(const Ideal& ideal, int d, const Context& ctx) {
  Hypotheses h;
  try {
    h.kd = check_kd(minimal_forms(ideal, ctx), d, ctx.gb).holds;
  } catch (const InvalidArgument& e) {
    if (e.code() != "mixed_degrees") throw;
  }
  if (ideal.nvars() <= 6) h.lines = fano_lines(ideal, ctx.gb).contains_lines;
  return h;
}

Section scan_section(const Ideal& ideal, VanishingVariant variant, int d, const Hypotheses& hyp,
                     const Context& ctx) {
  const CommandOptions& o = ctx.opt;
  const VanishingScan scan = vanishing_scan(ideal, d, o.powers, o.window, variant, ctx.gb);
  json bounds = json::array();
  for (const auto& [a, bound] : scan.bounds) {
    bounds.push_back({{"a", num(a)}, {"bound", num(bound)}, {"hypothesis", scan.hypothesis.at(a)}});
  }
  json cells = json::array();
  for (const auto& [key, cell] : scan.table.cells) cells.push_back(cell_json(cell));
  json below = json::array();
  for (const auto& cell : scan.below_bound) below.push_back(cell_json(cell));
  json violations = json::array();
  for (const auto& v : scan.violations) {
    violations.push_back({{"a", num(v.a)}, {"i", num(v.i)}, {"k", num(v.k)}, {"value", num(v.value)}});
  }
  json inconsistent = json::array();
  for (const auto& [a, k] : scan.inconsistent) inconsistent.push_back({{"a", num(a)}, {"k", num(k)}});
  Section s;
  s.result = {{"applicable", hyp.applicable()},
              {"below_bound", below},
              {"bounds", bounds},
              {"cells", cells},
              {"d", num(scan.d)},
              {"e", num(scan.e)},
              {"hypotheses", hyp.to_json()},
              {"inconsistent", inconsistent},
              {"n", num(scan.n)},
              {"r", num(scan.r)},
              {"variant", variant == VanishingVariant::Little ? "little" : "second"},
              {"violations", violations},
              {"window", num(variant == VanishingVariant::Little ? o.window : 0L)}};
  if (!scan.violations.empty() && hyp.applicable()) {
    s.violations.push_back(variant == VanishingVariant::Little ? "vanishing_little" : "vanishing_second");
  }
  if (!scan.inconsistent.empty()) s.violations.push_back("euler");
  return s;
}

VanishingVariant parse_scan_variant(const std::string& name) {
  if (name == "little") return VanishingVariant::Little;
  if (name == "second") return VanishingVariant::Second;
  throw InvalidArgument("unknown_variant", "scan variant must be 'little' or 'second'");
}

Section vanish_section(const Ideal& ideal, const Context& ctx) {
  require_homogeneous(ideal);
  const int d = ctx.opt.degree.value_or(top_degree(minimal_forms(ideal, ctx)));
  return scan_section(ideal, parse_scan_variant(ctx.opt.variant), d, scan_hypotheses(ideal, d, ctx), ctx);
}

Section flip_section() {
  Section s;
  const KvRewrite kv = kv_rewrite(kv_base());
  const bool perturbed_rejected = !verify_kv_rewrite(DivisorClass(
      Space::M2tilde, {2 * Scalar::symbol(Symbol::K), -Scalar::symbol(Symbol::K), -2}));
  std::size_t checked = 0;
  json failures = json::array();
  for (long r = 1; 2 * r + 3 <= 12; ++r) {
    for (long n = 2 * r + 3; n <= 12; ++n) {
      for (long k = 2; k <= 10; ++k) {
        ++checked;
        if (!kv_rewrite(kv_base(k), n, r, k).holds) {
          failures.push_back({{"k", num(k)}, {"n", num(n)}, {"r", num(r)}});
        }
      }
    }
  }
  const std::string canonical = canonical_class(Space::M2tilde).display();
  const bool canonical_matches = canonical == "O(−n−1, n−r−1, n−2r−2)";
  const DivisorClass pulled = pullback_h(DivisorClass(Space::M2, {3, -2}));
  const bool pullback_matches = pulled == DivisorClass(Space::M2tilde, {3, -2, -1});
  const DivisorClass f = pullback_h(DivisorClass(Space::M2, {2, -1}));
  bool rays_distinct = !f.proportional_to(lk_class());
  for (long k = 2; k <= 10; ++k) rays_distinct = rays_distinct && !f.proportional_to(lk_class(k));
  s.result = {{"canonical_class", canonical},
              {"canonical_matches", canonical_matches},
              {"certified_k", num(kCertifiedFlipK)},
              {"integer_grid", {{"checked", num(checked)}, {"failures", failures}}},
              {"kv_rewrite",
               {{"alpha", kv.alpha.to_string()},
                {"holds", kv.holds},
                {"lhs", kv.lhs.to_string()},
                {"perturbed_rejected", perturbed_rejected},
                {"rhs", kv.rhs.to_string()}}},
              {"lk_class", lk_class().to_string()},
              {"pullback", {{"input", "O(3, -2)"}, {"matches", pullback_matches}, {"output", pulled.to_string()},
                {"statement", pullback_statement(DivisorClass(Space::M2, {3, -2}))}}},
              {"rays_distinct", rays_distinct}};
  if (!kv.holds || !perturbed_rejected || !failures.empty() || !canonical_matches || !pullback_matches ||
      !rays_distinct) {
    s.violations.push_back("flip_arithmetic");
  }
  return s;
}

json formula_json(const ThresholdFormula& f) {
  json out = {{"bound", f.bound.to_string()},
              {"statement", f.statement()},
              {"strict", f.strict},
              {"subject", f.subject},
              {"variant", to_string(f.variant)}};
  if (f.twist) out["twist"] = f.twist->to_string();
  return out;
}

Section thresholds_section(const Ideal* ideal, const Context& ctx) {
  const CommandOptions& o = ctx.opt;
  long n = 0, r = 0, e = 0, d = 0;
  if (ideal) {
    require_homogeneous(*ideal);
    n = static_cast<long>(ideal->nvars()) - 1;
    r = hilbert_data(*ideal, ctx.gb).dimension;
    e = n - r;
    d = top_degree(minimal_forms(*ideal, ctx));
  } else if (!o.n || !o.r || !o.d) {
    throw InvalidArgument("missing_parameter", "thresholds without an input needs --n, --r and --d");
  }
  n = o.n.value_or(n);
  r = o.r.value_or(r);
  e = o.e.value_or(ideal && !o.n && !o.r ? e : n - r);
  d = o.d.value_or(d);
  json list = json::array();
  for (int a : o.powers) {
    const ThresholdParams p{d, e, a, n, r};
    list.push_back({{"a", num(a)},
                    {"little", formula_json(threshold(ThresholdVariant::Little, p))},
                    {"second", formula_json(threshold(ThresholdVariant::Second, p))},
                    {"veronese", formula_json(threshold(ThresholdVariant::Veronese, p))}});
  }
  Section s;
  s.result = {{"d", num(d)}, {"e", num(e)}, {"formulas", list}, {"n", num(n)}, {"r", num(r)}};
  return s;
}

CorpusEntry generate(const CommandOptions& o) {
  auto need = [&](std::size_t count) {
    if (o.params.size() != count) {
      throw InvalidArgument("bad_parameters", o.family + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (o.family == "rational-normal-curve") {
    need(1);
    return rational_normal_curve(o.params[0], o.field);
  }
  if (o.family == "veronese") {
    need(2);
    return veronese(o.params[0], o.params[1], o.field);
  }
  if (o.family == "segre") {
    need(2);
    return segre(o.params[0], o.params[1], o.field);
  }
  if (o.family == "complete-intersection") {
    if (o.params.empty()) throw InvalidArgument("bad_parameters", "complete-intersection needs degrees");
    return complete_intersection(o.params, o.seed, static_cast<int>(o.n.value_or(3)), o.field);
  }
  throw InvalidArgument("unknown_family", "unknown corpus family '" + o.family + "'");
}

json entry_metadata(const CorpusEntry& e) {
  json out = {{"certificate_note", e.certificate_note},
              {"conics", to_string(e.conics)},
              {"family", e.family},
              {"generator_degree", num(e.generator_degree)},
              {"lines", to_string(e.lines)},
              {"name", e.name},
              {"smooth", e.smooth ? json(*e.smooth) : json(nullptr)}};
  if (e.parametrization) {
    out["parametrization"] = {{"forms", polys(e.parametrization->forms)},
                              {"source", e.parametrization->source->names()}};
  }
  return out;
}

Section corpus_section(const CommandOptions& o) {
  const CorpusEntry e = generate(o);
  Section s;
  s.result = entry_metadata(e);
  s.result["generators"] = polys(e.ideal.generators());
  s.result["model"] = corpus_model(e);
  return s;
}

// ---- report-all ----

struct Entry {
  std::string name;
  Ideal ideal;
  const CorpusEntry* corpus = nullptr;
};

bool vanishes(std::span<const Polynomial> fs, std::span<const FieldElement> p) {
  return std::all_of(fs.begin(), fs.end(), [&](const Polynomial& f) { return f.evaluate(p).is_zero(); });
}

json sampled_fibers(const CorpusEntry& e, const std::vector<Polynomial>& v, const Ideal& sec, std::uint64_t seed,
                    bool& other, const Context& ctx) {
  SeededRng rng(seed);
  const Field& field = e.ideal.ring()->field();
  json out = json::array();
  auto record = [&](const std::vector<FieldElement>& p, const char* sampled) {
    const FiberAnalysis f = analyze_fiber(v, p, 2, ctx.gb);
    if (f.kind == FiberAnalysis::Kind::Other) other = true;
    json j = fiber_json(f);
    j["point"] = coords(p);
    j["on_secant"] = vanishes(sec.generators(), p);
    j["sampled"] = sampled;
    out.push_back(std::move(j));
  };
  for (int i = 0, attempts = 0; i < 4 && attempts < 64; ++attempts) {
    const auto a = e.parametrization->sample(rng);
    const auto b = e.parametrization->sample(rng);
    const FieldElement lambda(field, rng.uniform(1, 9));
    const FieldElement mu(field, rng.uniform(1, 9));
    std::vector<FieldElement> p;
    for (std::size_t c = 0; c < a.size(); ++c) p.push_back(lambda * a[c] + mu * b[c]);
    if (vanishes(v, p)) continue;
    record(p, "chord");
    ++i;
  }
  if (sec.is_zero()) return out;
  for (int i = 0, attempts = 0; i < 4 && attempts < 64; ++attempts) {
    std::vector<FieldElement> p;
    for (std::size_t c = 0; c < e.ideal.nvars(); ++c) p.emplace_back(field, rng.uniform(-5, 5));
    if (vanishes(sec.generators(), p)) continue;
    record(p, "general");
    ++i;
  }
  return out;
}

json error_json(const Error& e) { return {{"code", e.code()}, {"message", e.what()}}; }

bool is_resource_error(const Error& e) {
  return dynamic_cast<const DegreeCapExceeded*>(&e) != nullptr || e.code() == "resource_cap";
}

json report_entry(const Entry& entry, std::size_t index, const Context& ctx, std::vector<std::string>& violations,
                  bool& resource_hit) {
  const Ideal& ideal = entry.ideal;
  json out = {{"generators", polys(ideal.generators())}, {"name", entry.name}};
  auto flag = [&](const std::string& tag) { violations.push_back(entry.name + ": " + tag); };
  // Runs one subsection; library errors are recorded in place.
  auto guarded = [&](const std::string& key, const std::function<json()>& body) -> bool {
    try {
      out[key] = body();
      return true;
    } catch (const Error& e) {
      if (is_resource_error(e)) resource_hit = true;
      out[key] = {{"error", error_json(e)}};
      return false;
    }
  };
  require_homogeneous(ideal);
  if (entry.corpus) out["corpus"] = entry_metadata(*entry.corpus);
  guarded("hilbert", [&] { return hilbert_json(hilbert_data(ideal, ctx.gb)); });
  guarded("gb", [&] { return gb_section(ideal, ctx).result; });
  guarded("betti", [&] { return betti_section(ideal, ctx).result; });

  const auto forms = minimal_forms(ideal, ctx);
  const int d = top_degree(forms);
  const bool quadrics = !forms.empty() && std::all_of(forms.begin(), forms.end(), [](const Polynomial& f) {
    return f.degree() == 2;
  });
  std::optional<bool> k2;
  if (quadrics) {
    guarded("check_k2", [&] {
      json j = kd_section(ideal, 2, ctx).result;
      k2 = j["holds"].get<bool>();
      return j;
    });
  } else {
    out["check_k2"] = {{"applicable", false}};
  }
  std::optional<bool> n2;
  guarded("check_n2", [&] {
    json j = n2_section(ideal, ctx).result;
    n2 = j["holds"].get<bool>();
    return j;
  });
  if (n2 == true && k2 != true) flag("n2_without_k2");

  std::optional<bool> lines;
  if (ideal.nvars() <= 6) {
    guarded("lines", [&] {
      json j = lines_section(ideal, ctx).result;
      lines = j["contains_lines"].get<bool>();
      return j;
    });
  } else {
    out["lines"] = {{"skipped", "more than 6 variables"}};
  }
  Hypotheses hyp;
  hyp.kd = quadrics ? k2 == true : false;
  hyp.lines = lines;
  const bool conics = entry.corpus && entry.corpus->conics == Certificate::Present;

  std::optional<SecantReport> sec;
  if (quadrics) {
    guarded("secant", [&] {
      sec = secant_report(ideal, ctx.gb);
      json j = secant_json(sec->secant, hilbert_data(sec->secant, ctx.gb), sec->generated_in_degree_le_3);
      j["deficiency"] = deficiency_json(*sec);
      return j;
    });
    if (sec && !sec->formula_consistent && hyp.applicable() && !conics) flag("deficiency_formula");
  } else {
    guarded("secant", [&] { return secant_section(ideal, ctx).result; });
  }

  if (entry.corpus && entry.corpus->parametrization) {
    if (sec) {
      bool other = false;
      guarded("fibers", [&] {
        return sampled_fibers(*entry.corpus, sec->quadrics, sec->secant, derive_seed(ctx.opt.seed, 2 * index),
                              other, ctx);
      });
      if (other && hyp.applicable()) flag("fiber_dichotomy");
    }
    guarded("four_point", [&] {
      const FourPointReport r =
          four_point_span_check(*entry.corpus, ctx.opt.trials, derive_seed(ctx.opt.seed, 2 * index + 1));
      json failures = json::array();
      for (const auto& f : r.failures) failures.push_back({{"rank", num(f.rank)}, {"trial", num(f.trial)}});
      if (!r.all_passed && !conics && lines == false) flag("four_point");
      return json{{"all_passed", r.all_passed},
                  {"contains_conics", r.contains_conics},
                  {"failures", failures},
                  {"note", r.note},
                  {"seed", num(r.seed)},
                  {"trials", num(r.trials)}};
    });
  }

  json scans = json::object();
  for (VanishingVariant variant : {VanishingVariant::Little, VanishingVariant::Second}) {
    const std::string key = variant == VanishingVariant::Little ? "little" : "second";
    try {
      Section s = scan_section(ideal, variant, d, hyp, ctx);
      for (const auto& v : s.violations) flag(v);
      scans[key] = std::move(s.result);
    } catch (const Error& e) {
      if (is_resource_error(e)) resource_hit = true;
      scans[key] = {{"error", error_json(e)}};
    }
  }
  out["vanish_scan"] = scans;
  guarded("thresholds", [&] { return thresholds_section(&ideal, ctx).result; });
  return out;
}

Section report_all_section(const InputModel* model, const Context& ctx) {
  std::vector<CorpusEntry> corpus;
  std::vector<Entry> entries;
  if (model) {
    for (const auto& [name, ideal] : model->ideals) {
      if (ctx.opt.ideal.empty() || ctx.opt.ideal == name) entries.push_back({name, ideal});
    }
    if (entries.empty()) throw InvalidArgument("undeclared_name", "no matching ideal in the input");
  } else {
    corpus = default_corpus(ctx.opt.field, ctx.opt.seed);
    for (const auto& e : corpus) entries.push_back({e.name, e.ideal, &e});
  }
  Section s;
  bool resource_hit = false;
  json list = json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    list.push_back(report_entry(entries[i], i, ctx, s.violations, resource_hit));
  }
  Section flip = flip_section();
  for (const auto& v : flip.violations) s.violations.push_back("flip: " + v);
  s.result = {{"entries", list}, {"flip_verify", flip.result}, {"resource_cap_hit", resource_hit}};
  return s;
}

const Ideal& select_ideal(const InputModel& m, const CommandOptions& o) {
  if (!o.ideal.empty()) return m.ideal(o.ideal);
  if (m.ideals.empty()) throw InvalidArgument("undeclared_name", "the input declares no ideal");
  return m.ideals.front().second;
}

const std::vector<FieldElement>& select_point(const InputModel& m, const CommandOptions& o) {
  if (!o.point.empty()) return m.point(o.point);
  if (m.points.empty()) throw InvalidArgument("undeclared_name", "the input declares no point");
  return m.points.front().second;
}

json parameters_for(const std::string& command, const CommandOptions& o) {
  json p = {{"degree_cap", num(o.degree_cap)}, {"field", field_tag(o.field)}};
  auto powers = [&] {
    json a = json::array();
    for (int v : o.powers) a.push_back(num(v));
    return a;
  };
  if (!o.ideal.empty()) p["ideal"] = o.ideal;
  if (command == "gb") p["order"] = o.order;
  if (command == "check-kd" && o.degree) p["degree"] = num(*o.degree);
  if (command == "check-n2" || command == "report-all") p["normality_bound"] = num(o.normality_bound);
  if (command == "fiber" && !o.point.empty()) p["point"] = o.point;
  if (command == "cohomology") {
    p["powers"] = powers();
    p["twists"] = {num(o.twist_low), num(o.twist_high)};
  }
  if (command == "vanish-scan" || command == "report-all") {
    p["powers"] = powers();
    p["window"] = num(o.window);
  }
  if (command == "vanish-scan") p["variant"] = o.variant;
  if (command == "thresholds") {
    p["powers"] = powers();
    for (const auto& [key, value] : {std::pair{"n", o.n}, {"r", o.r}, {"e", o.e}, {"d", o.d}}) {
      if (value) p[key] = num(*value);
    }
  }
  if (command == "corpus") {
    p["family"] = o.family;
    json params = json::array();
    for (int v : o.params) params.push_back(num(v));
    p["params"] = params;
  }
  if (command == "report-all") {
    p["corpus"] = o.corpus;
    p["trials"] = num(o.trials);
  }
  return p;
}

Section dispatch(const std::string& command, const InputModel* model, const Context& ctx) {
  const CommandOptions& o = ctx.opt;
  if (command == "flip-verify") return flip_section();
  if (command == "corpus") return corpus_section(o);
  if (command == "report-all") return report_all_section(o.corpus ? nullptr : model, ctx);
  if (command == "thresholds") return thresholds_section(model ? &select_ideal(*model, o) : nullptr, ctx);
  const Ideal& ideal = select_ideal(*model, o);
  if (command == "gb") return gb_section(ideal, ctx);
  if (command == "syz") return syz_section(ideal, ctx);
  if (command == "betti") return betti_section(ideal, ctx);
  if (command == "check-k2") return kd_section(ideal, 2, ctx);
  if (command == "check-kd") return kd_section(ideal, o.degree, ctx);
  if (command == "check-n2") return n2_section(ideal, ctx);
  if (command == "lines") return lines_section(ideal, ctx);
  if (command == "secant") return secant_section(ideal, ctx);
  if (command == "deficiency") return deficiency_section(ideal, ctx);
  if (command == "fiber") return fiber_section(ideal, select_point(*model, o), ctx);
  if (command == "cohomology") return cohomology_section(ideal, ctx);
  if (command == "vanish-scan") return vanish_section(ideal, ctx);
  throw InvalidArgument("unknown_command", "unknown command '" + command + "'");
}

void render_text(const json& value, const std::string& path, std::string& out) {
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) render_text(item, path.empty() ? key : path + "." + key, out);
  } else if (value.is_array()) {
    if (value.empty()) out += path + ": []\n";
    for (std::size_t i = 0; i < value.size(); ++i) render_text(value[i], path + "[" + std::to_string(i) + "]", out);
  } else if (value.is_string()) {
    const std::string s = value.get<std::string>();
    out += path + ":" + (s.find('\n') == std::string::npos ? " " + s : "\n" + s) + "\n";
  } else {
    out += path + ": " + value.dump() + "\n";
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "gb",         "syz",   "betti",      "check-k2",    "check-kd",    "check-n2",   "lines",     "secant",
      "deficiency", "fiber", "cohomology", "vanish-scan", "flip-verify", "thresholds", "report-all", "corpus"};
  return names;
}

bool needs_input(const std::string& command, const CommandOptions& options) {
  if (command == "flip-verify" || command == "corpus") return false;
  if (command == "report-all") return !options.corpus;
  if (command == "thresholds") return !(options.n && options.r && options.d);
  return true;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<CorpusEntry> default_corpus(const Field& field, std::uint64_t seed) {
  return {rational_normal_curve(3, field), rational_normal_curve(4, field), veronese(2, 2, field),
          segre(1, 2, field), complete_intersection({2, 2}, seed, 3, field)};
}

std::string corpus_model(const CorpusEntry& entry) {
  InputModel m;
  m.ring_name = "R";
  m.ring = entry.ideal.ring();
  m.ideals.emplace_back("X", entry.ideal);
  return "# " + entry.name + "\n" + print_model(m);
}

Outcome run_command(const std::string& command, const std::string& input_text, const CommandOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  json& report = outcome.report;
  report["command"] = command;
  report["engine_version"] = SYZFLIP_VERSION;
  report["seed"] = num(options.seed);
  report["parameters"] = parameters_for(command, options);
  const bool uses_input = needs_input(command, options) || (command == "thresholds" && !input_text.empty());
  std::string hashed = uses_input ? input_text : "";
  try {
    if (std::find(command_names().begin(), command_names().end(), command) == command_names().end()) {
      throw InvalidArgument("unknown_command", "unknown command '" + command + "'");
    }
    const Context ctx{options, GroebnerOptions{options.degree_cap}};
    std::optional<InputModel> model;
    if (uses_input) model = parse_input(input_text, options.field);
    if (command == "report-all" && options.corpus) {
      for (const auto& e : default_corpus(options.field, options.seed)) hashed += corpus_model(e);
    }
    Section s = dispatch(command, model ? &*model : nullptr, ctx);
    report["result"] = std::move(s.result);
    json violations = json::array();
    for (const auto& v : s.violations) violations.push_back(v);
    report["violations"] = violations;
    report["status"] = s.violations.empty() ? "ok" : "violation";
    outcome.exit_code = s.violations.empty() ? kExitOk : kExitViolation;
  } catch (const Error& e) {
    report["error"] = error_json(e);
    report["status"] = "error";
    outcome.exit_code = is_resource_error(e) ? kExitResource : kExitInput;
  }
  report["input_hash"] = "fnv1a64:" + hex64(fnv1a(hashed));
  if (options.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report["wall_clock_ms"] = num(static_cast<long long>(ms.count()));
  }
  return outcome;
}

std::string render(const Outcome& outcome, const std::string& format) {
  if (format == "text") {
    if (outcome.report.value("command", "") == "corpus" && outcome.report.contains("result")) {
      return outcome.report["result"]["model"].get<std::string>();
    }
    std::string out;
    render_text(outcome.report, "", out);
    return out;
  }
  return outcome.report.dump(2) + "\n";
}

}  // namespace syzflip::cli
