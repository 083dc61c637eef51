#include "syzflip/secant.hpp"

#include <algorithm>

#include "syzflip/conditions.hpp"
#include "syzflip/error.hpp"

namespace syzflip {

namespace {

std::string fresh_prefix(const RingPtr& ring, std::string prefix) {
  for (;;) {
    bool clash = false;
    for (std::size_t i = 0; i < ring->nvars() && !clash; ++i) {
      clash = ring->index_of(prefix + std::to_string(i)) >= 0;
    }
    if (!clash) return prefix;
    prefix += "_";
  }
}

}  // namespace

Ideal secant_ideal(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("secant ideal needs a homogeneous ideal");
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  const std::string prefix = fresh_prefix(ring, "u");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  const RingPtr join = Ring::make(names, ring->field());
  std::vector<Polynomial> gens;
  if (ring->field().characteristic() == 2) {
    std::vector<Polynomial> at_x;
    std::vector<Polynomial> at_difference;
    for (std::size_t i = 0; i < n; ++i) {
      at_x.push_back(Polynomial::variable(join, i));
      at_difference.push_back(Polynomial::variable(join, n + i) - Polynomial::variable(join, i));
    }
    for (const auto& g : ideal.generators()) {
      gens.push_back(g.substitute(at_x));
      gens.push_back(g.substitute(at_difference));
    }
  } else {
    // Points a, b of the cone with z = a + b and u = a - b: the ideal becomes
    // the parts of f(z + u) of even and odd degree in u.
    std::vector<Polynomial> shifted;
    for (std::size_t i = 0; i < n; ++i) {
      shifted.push_back(Polynomial::variable(join, n + i) + Polynomial::variable(join, i));
    }
    for (const auto& g : ideal.generators()) {
      const Polynomial expanded = g.substitute(shifted);
      std::vector<Term> even;
      std::vector<Term> odd;
      for (const auto& t : expanded.terms()) {
        int u_degree = 0;
        for (std::size_t i = 0; i < n; ++i) u_degree += t.mono[i];
        (u_degree % 2 == 0 ? even : odd).push_back(t);
      }
      gens.emplace_back(join, std::move(even));
      gens.emplace_back(join, std::move(odd));
    }
  }
  Ideal eliminated = eliminate(Ideal(join, std::move(gens)), n, options);
  // Same names as the input but always grevlex.
  const RingPtr target = ring->with_order(MonomialOrder::grevlex());
  std::vector<Polynomial> moved;
  for (const auto& g : eliminated.generators()) {
    moved.emplace_back(target, std::vector<Term>(g.terms().begin(), g.terms().end()));
  }
  Ideal result(target, std::move(moved));
  if (result.is_zero()) return result;
  return minimalize(saturate(result, Ideal::irrelevant(target), options), options);
}

std::vector<Polynomial> quadrics_of(const Ideal& ideal, const GroebnerOptions& options) {
  std::vector<Polynomial> low;
  const Ideal minimal = minimalize(ideal, options);
  for (const auto& g : minimal.generators()) {
    if (g.degree() < 2) {
      throw InvalidArgument("the ideal contains linear forms; restrict to the span first");
    }
    if (g.degree() == 2) low.push_back(g);
  }
  return span_basis(low);
}

SecantReport secant_report(const Ideal& ideal, const GroebnerOptions& options) {
  std::vector<Polynomial> quadrics = quadrics_of(ideal, options);
  if (quadrics.empty()) throw InvalidArgument("no_quadrics", "the ideal contains no quadrics");
  const int r = hilbert_data(ideal, options).dimension;
  Ideal secant = secant_ideal(ideal, options);
  const HilbertData hs = hilbert_data(secant, options);
  const bool fills = secant.is_zero();
  // Y: closure of the image of Sec X under the quadrics.
  std::vector<Polynomial> images;
  for (const auto& q : quadrics) {
    images.emplace_back(secant.ring(), std::vector<Term>(q.terms().begin(), q.terms().end()));
  }
  Ideal image = kernel_of_map(images, fills ? nullptr : &secant, "t", options);
  const int dim_y = hilbert_data(image, options).dimension;
  const int deficiency = 2 * r + 1 - hs.dimension;
  const bool cubic = cubic_generation(secant, options);
  return SecantReport{std::move(secant),
                      r,
                      static_cast<int>(ideal.nvars()) - 1,
                      hs.dimension,
                      deficiency,
                      fills,
                      fills ? std::nullopt : std::optional<mpz_class>(hs.degree),
                      cubic,
                      std::move(quadrics),
                      std::move(image),
                      dim_y,
                      2 * deficiency == 2 * r - dim_y};
}

Ideal fiber_ideal(std::span<const Polynomial> forms, std::span<const FieldElement> p,
                  const GroebnerOptions& options) {
  if (forms.empty()) throw InvalidArgument("fiber of an empty system");
  const RingPtr& ring = forms.front().ring();
  if (p.size() != ring->nvars()) throw InvalidArgument("point has the wrong number of coordinates");
  std::vector<FieldElement> values;
  for (const auto& f : forms) values.push_back(f.evaluate(p));
  if (std::all_of(values.begin(), values.end(), [](const FieldElement& v) { return v.is_zero(); })) {
    throw InvalidArgument("base_point", "the point lies in the base locus of the system");
  }
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      gens.push_back(forms[i].scaled(values[j]) - forms[j].scaled(values[i]));
    }
  }
  const Ideal base(ring, std::vector<Polynomial>(forms.begin(), forms.end()));
  Ideal s = saturate(Ideal(ring, std::move(gens)), base, options);
  return minimalize(saturate(s, Ideal::irrelevant(ring), options), options);
}

std::string to_string(FiberAnalysis::Kind kind) {
  switch (kind) {
    case FiberAnalysis::Kind::ReducedPoint:
      return "reduced_point";
    case FiberAnalysis::Kind::LinearSpace:
      return "linear_space";
    case FiberAnalysis::Kind::Other:
      break;
  }
  return "other";
}

FiberAnalysis analyze_fiber(std::span<const Polynomial> forms, std::span<const FieldElement> p,
                            int d, const GroebnerOptions& options) {
  Ideal fiber = fiber_ideal(forms, p, options);
  const HilbertData fiber_data = hilbert_data(fiber, options);
  FiberAnalysis a{std::move(fiber), fiber_data, false, {}, FiberAnalysis::Kind::Other};
  a.linear = std::all_of(a.fiber.generators().begin(), a.fiber.generators().end(),
                         [](const Polynomial& g) { return g.degree() == 1; });
  const Ideal base(a.fiber.ring(), std::vector<Polynomial>(forms.begin(), forms.end()));
  a.intersection_data = hilbert_data(sum(a.fiber, base), options);
  const int k = a.fiber_data.dimension;
  if (!a.linear || a.fiber_data.degree != 1 || k < 0) return a;
  const bool p_in_fiber = std::all_of(a.fiber.generators().begin(), a.fiber.generators().end(),
                                      [&](const Polynomial& g) { return g.evaluate(p).is_zero(); });
  if (k == 0) {
    if (p_in_fiber && a.intersection_data.dimension < 0) a.kind = FiberAnalysis::Kind::ReducedPoint;
  } else if (a.intersection_data.dimension == k - 1 && a.intersection_data.degree == d) {
    a.kind = FiberAnalysis::Kind::LinearSpace;
  }
  return a;
}

bool cubic_generation(const Ideal& ideal, const GroebnerOptions& options) {
  const Ideal minimal = minimalize(ideal, options);
  return std::all_of(minimal.generators().begin(), minimal.generators().end(),
                     [](const Polynomial& g) { return g.degree() <= 3; });
}

}  // namespace syzflip
