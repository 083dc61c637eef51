#include "syzflip/groebner.hpp"

#include <algorithm>

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

ModuleOrder ideal_order(const RingPtr& ring) { return ModuleOrder(ring->order(), {0}); }

ModuleVector as_vector(const Polynomial& f) {
  ModuleVector v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.mono, 0, t.coeff});
  return v;
}

Polynomial as_polynomial(const ModuleVector& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mono, t.coeff});
  return Polynomial(ring, std::move(terms));
}

void check_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch("ideals from different rings");
}

// Elements whose leading term lies in the tracking component `comp`.
std::vector<Polynomial> tracked(const std::vector<ModuleVector>& basis, std::uint32_t comp,
                                const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& v : basis) {
    if (v.front().comp != comp) continue;
    out.push_back(as_polynomial(v, ring));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch("ideal generator from another ring");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(gens));
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

Ideal Ideal::in_ring(const RingPtr& target) const {
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(g.in_ring(target));
  return Ideal(target, std::move(gens));
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ", ";
    out += generators_[i].to_string();
  }
  return out + ")";
}

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const noexcept {
  return elements_.size() == 1 && elements_[0].is_constant();
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw RingMismatch("normal form across rings");
  // Division by a reduced basis: repeatedly cancel the largest reducible term.
  std::vector<Term> remainder;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& lead = rest.terms().front();
    const Polynomial* reducer = nullptr;
    for (const auto& g : elements_) {
      if (g.leading_monomial().divides(lead.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder.push_back(lead);
      std::vector<Term> tail(rest.terms().begin() + 1, rest.terms().end());
      rest = Polynomial(ring_, std::move(tail));
      continue;
    }
    const Monomial m = lead.mono / reducer->leading_monomial();
    rest -= reducer->mul_term(m, lead.coeff / reducer->leading_coeff());
  }
  return Polynomial(ring_, std::move(remainder));
}

GroebnerBasis groebner_basis(const Ideal& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  ModuleGroebner engine(ring, ideal_order(ring), options);
  for (const auto& g : ideal.generators()) engine.add(as_vector(g));
  engine.run();
  std::vector<Polynomial> elements;
  for (const auto& v : engine.reduced_basis()) elements.push_back(as_polynomial(v, ring));
  return GroebnerBasis(ring, std::move(elements));
}

GroebnerBasis groebner_basis(const Ideal& ideal, const MonomialOrder& order,
                             const GroebnerOptions& options) {
  if (ideal.ring()->order() == order) return groebner_basis(ideal, options);
  return groebner_basis(ideal.in_ring(ideal.ring()->with_order(order)), options);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const GroebnerOptions& options) {
  return groebner_basis(ideal, options).normal_form(f);
}

bool contains(const Ideal& ideal, const Polynomial& f, const GroebnerOptions& options) {
  return normal_form(f, ideal, options).is_zero();
}

bool contains(const Ideal& big, const Ideal& small, const GroebnerOptions& options) {
  check_same(big, small);
  const GroebnerBasis gb = groebner_basis(big, options);
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

bool equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  check_same(a, b);
  return groebner_basis(a, options) == groebner_basis(b, options);
}

Ideal eliminate(const Ideal& ideal, std::size_t first_block, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  if (first_block > ring->nvars()) {
    throw InvalidArgument("elimination block of size " + std::to_string(first_block) +
                          " exceeds " + std::to_string(ring->nvars()) + " variables");
  }
  if (first_block == ring->nvars()) {
    throw InvalidArgument("cannot eliminate every variable");
  }
  std::vector<std::string> rest(ring->names().begin() + static_cast<std::ptrdiff_t>(first_block),
                                ring->names().end());
  const RingPtr target = Ring::make(rest, ring->field(), MonomialOrder::grevlex());
  if (first_block == 0) return ideal.in_ring(target);

  const GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::block(first_block), options);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.elements()) {
    const Monomial& lm = g.leading_monomial();
    bool free = true;
    for (std::size_t i = 0; i < first_block && free; ++i) free = lm[i] == 0;
    if (!free) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      const auto e = t.mono.exponents();
      terms.push_back({Monomial(std::span<const int>(e).subspan(first_block)), t.coeff});
    }
    kept.emplace_back(target, std::move(terms));
  }
  return Ideal(target, std::move(kept));
}

Ideal sum(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  check_same(a, b);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal power(const Ideal& ideal, unsigned exponent) {
  if (exponent == 0) return Ideal::unit(ideal.ring());
  // Products of generators with nondecreasing indices avoid duplicates.
  struct Partial {
    Polynomial value;
    std::size_t last;
  };
  std::vector<Partial> layer;
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    layer.push_back({ideal.generators()[i], i});
  }
  for (unsigned step = 1; step < exponent; ++step) {
    std::vector<Partial> next;
    for (const auto& p : layer) {
      for (std::size_t i = p.last; i < ideal.generators().size(); ++i) {
        next.push_back({p.value * ideal.generators()[i], i});
      }
    }
    layer = std::move(next);
  }
  std::vector<Polynomial> gens;
  for (auto& p : layer) gens.push_back(std::move(p.value));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal intersect(std::span<const Ideal> ideals, const GroebnerOptions& options) {
  if (ideals.empty()) throw InvalidArgument("intersection of no ideals");
  const RingPtr& ring = ideals.front().ring();
  for (const auto& i : ideals) check_same(i, ideals.front());
  if (ideals.size() == 1) return ideals.front();
  const std::size_t m = ideals.size();
  std::vector<int> shifts(m + 1, 0);
  ModuleOrder order(ring->order(), shifts, m);
  ModuleGroebner engine(ring, order, options);
  // (1, ..., 1 | 1) plus I_j e_j: vectors vanishing on the first m slots carry I_1 ∩ ... ∩ I_m.
  ModuleVector diag;
  const FieldElement one = FieldElement::one(ring->field());
  const Monomial unit(ring->nvars());
  for (std::size_t j = 0; j <= m; ++j) diag.push_back({unit, static_cast<std::uint32_t>(j), one});
  engine.add(std::move(diag));
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& g : ideals[j].generators()) {
      ModuleVector v;
      for (const auto& t : g.terms()) v.push_back({t.mono, static_cast<std::uint32_t>(j), t.coeff});
      engine.add(std::move(v));
    }
  }
  engine.run();
  return Ideal(ring, tracked(engine.reduced_basis(), static_cast<std::uint32_t>(m), ring));
}

Ideal quotient(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options) {
  check_same(ideal, by);
  const RingPtr& ring = ideal.ring();
  if (by.is_zero()) return Ideal::unit(ring);
  const std::size_t m = by.generators().size();
  const int tracking_shift = std::max(0, by.generators().front().degree());
  std::vector<int> shifts(m + 1, 0);
  shifts[m] = tracking_shift;
  ModuleOrder order(ring->order(), shifts, m);
  ModuleGroebner engine(ring, order, options);
  ModuleVector head;
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& t : by.generators()[j].terms()) {
      head.push_back({t.mono, static_cast<std::uint32_t>(j), t.coeff});
    }
  }
  head.push_back({Monomial(ring->nvars()), static_cast<std::uint32_t>(m),
                  FieldElement::one(ring->field())});
  std::sort(head.begin(), head.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.cmp(a, b) > 0; });
  engine.add(std::move(head));
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& g : ideal.generators()) {
      ModuleVector v;
      for (const auto& t : g.terms()) v.push_back({t.mono, static_cast<std::uint32_t>(j), t.coeff});
      engine.add(std::move(v));
    }
  }
  engine.run();
  Ideal raw(ring, tracked(engine.reduced_basis(), static_cast<std::uint32_t>(m), ring));
  return groebner_basis(raw, options).ideal();
}

Ideal saturate(const Ideal& ideal, const Ideal& by, const GroebnerOptions& options) {
  check_same(ideal, by);
  GroebnerBasis current = groebner_basis(ideal, options);
  for (;;) {
    if (current.is_unit()) return current.ideal();
    GroebnerBasis next = groebner_basis(quotient(current.ideal(), by, options), options);
    if (next == current) return current.ideal();
    current = std::move(next);
  }
}

Ideal kernel_of_map(std::span<const Polynomial> images, const Ideal* modulo,
                    const std::string& prefix, const GroebnerOptions& options) {
  if (images.empty()) throw InvalidArgument("kernel of a map with no images");
  const RingPtr& target = images.front().ring();
  const int degree = images.front().degree();
  for (const auto& f : images) {
    if (!same_ring(f.ring(), target)) throw RingMismatch("images from different rings");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != degree) {
      throw InvalidArgument("kernel_of_map needs nonzero homogeneous images of one degree");
    }
  }
  if (modulo != nullptr && !same_ring(modulo->ring(), target)) {
    throw RingMismatch("quotient ideal lives in another ring");
  }
  // Graph ring: target variables first (eliminated), then the source variables.
  std::vector<std::string> names = target->names();
  std::vector<std::string> source;
  for (std::size_t i = 0; i < images.size(); ++i) source.push_back(prefix + std::to_string(i));
  for (const auto& s : source) {
    if (target->index_of(s) >= 0) {
      throw InvalidArgument("source variable name '" + s + "' clashes with the target ring");
    }
  }
  names.insert(names.end(), source.begin(), source.end());
  const RingPtr graph = Ring::make(names, target->field());
  std::vector<Polynomial> embed;
  for (std::size_t i = 0; i < target->nvars(); ++i) embed.push_back(Polynomial::variable(graph, i));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    gens.push_back(Polynomial::variable(graph, target->nvars() + i) - images[i].substitute(embed));
  }
  if (modulo != nullptr) {
    for (const auto& q : modulo->generators()) gens.push_back(q.substitute(embed));
  }
  Ideal k = eliminate(Ideal(graph, std::move(gens)), target->nvars(), options);
  return groebner_basis(k, options).ideal();
}

Ideal minimalize(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("minimalize needs a homogeneous ideal");
  std::vector<Polynomial> sorted = ideal.generators();
  std::stable_sort(sorted.begin(), sorted.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
  });
  const RingPtr& ring = ideal.ring();
  ModuleGroebner engine(ring, ideal_order(ring), options);
  std::vector<Polynomial> kept;
  for (const auto& g : sorted) {
    if (!kept.empty() && engine.reduces_to_zero(as_vector(g))) continue;
    kept.push_back(g);
    engine.add(as_vector(g));
    engine.run();
  }
  return Ideal(ring, std::move(kept));
}

}  // namespace syzflip
