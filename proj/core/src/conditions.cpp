#include "syzflip/conditions.hpp"

#include <algorithm>
#include <map>

#include "syzflip/cohomology.hpp"
#include "syzflip/error.hpp"
#include "syzflip/linalg.hpp"

namespace syzflip {

namespace {

// Coefficient vector of a form in the basis of monomials of its degree.
std::vector<FieldElement> coefficients(const Polynomial& f, const std::vector<Monomial>& basis,
                                       const std::map<std::vector<int>, std::size_t>& index) {
  std::vector<FieldElement> out(basis.size(), FieldElement::zero(f.ring()->field()));
  for (const auto& t : f.terms()) out[index.at(t.mono.exponents())] = t.coeff;
  return out;
}

std::size_t projective_rank(std::span<const FieldElement> p, std::span<const FieldElement> q) {
  Matrix m(p.front().field(), 2, p.size());
  for (std::size_t c = 0; c < p.size(); ++c) {
    m(0, c) = p[c];
    m(1, c) = q[c];
  }
  return rank(std::move(m));
}

}  // namespace

KdReport check_kd(std::span<const Polynomial> forms, int d, const GroebnerOptions& options) {
  if (forms.empty()) throw InvalidArgument("(K_d) check of an empty system");
  for (const auto& f : forms) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != d) {
      throw InvalidArgument("mixed_degrees", "every form must be homogeneous of degree " +
                                                 std::to_string(d) + ": " + f.to_string());
    }
  }
  const RingPtr& ring = forms.front().ring();
  KdReport report;
  for (auto& s : syzygies(forms, options)) {
    if (s.degree <= d + 1) report.linear_syzygies.push_back(std::move(s));
  }
  const std::vector<int> shifts(forms.size(), d);
  const SubmoduleMembership engine(ring, shifts, report.linear_syzygies, options);
  report.holds = true;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      std::vector<Polynomial> entries(forms.size(), Polynomial(ring));
      entries[i] = forms[j];
      entries[j] = -forms[i];
      KoszulCertificate cert{i, j, engine.test(make_element(std::move(entries), shifts))};
      report.holds = report.holds && cert.membership.member;
      report.koszul.push_back(std::move(cert));
    }
  }
  return report;
}

N2Report check_n2(const Ideal& ideal, int normality_bound, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("(N_2) check needs a homogeneous ideal");
  if (ideal.is_zero()) throw InvalidArgument("(N_2) check of the zero ideal");
  const Ideal saturated = saturate(ideal, Ideal::irrelevant(ideal.ring()), options);
  if (!equal(saturated, ideal, options)) {
    throw InvalidArgument("unsaturated", "the ideal is not saturated; saturate it first");
  }
  N2Report report;
  const Resolution res = free_resolution(ideal, 1, options);
  report.betti = res.betti;
  int max_degree = 0;
  report.quadric_generation = true;
  report.linear_first_syzygies = true;
  for (const auto& [key, beta] : res.betti.entries()) {
    if (key.first == 0) {
      max_degree = std::max(max_degree, key.second);
      report.quadric_generation = report.quadric_generation && key.second == 2;
    } else if (key.first == 1) {
      report.linear_first_syzygies = report.linear_first_syzygies && key.second == 3;
    }
  }
  report.normality_checked_to = normality_bound >= 0 ? normality_bound : 2 * max_degree + 2;
  // S/I -> sum_k H^0(O_X(k)) is onto in degree k iff H^1_m(S/I)_k = 0.
  const GradedModule module = GradedModule::quotient(ideal, options);
  for (long k = 0; k <= report.normality_checked_to; ++k) {
    if (module.local_cohomology(1, k) != 0) report.normality_failures.push_back(k);
  }
  report.projectively_normal_in_range = report.normality_failures.empty();
  return report;
}

std::vector<Polynomial> span_basis(std::span<const Polynomial> forms) {
  std::vector<Polynomial> nonzero;
  for (const auto& f : forms) {
    if (!f.is_zero()) nonzero.push_back(f);
  }
  if (nonzero.empty()) return {};
  const RingPtr& ring = nonzero.front().ring();
  const int d = nonzero.front().degree();
  for (const auto& f : nonzero) {
    if (!f.is_homogeneous() || f.degree() != d) throw InvalidArgument("span of forms of mixed degrees");
  }
  const auto basis = monomials_of_degree(ring->nvars(), d);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
  Matrix m(ring->field(), nonzero.size(), basis.size());
  for (std::size_t r = 0; r < nonzero.size(); ++r) {
    const auto c = coefficients(nonzero[r], basis, index);
    for (std::size_t k = 0; k < basis.size(); ++k) m(r, k) = c[k];
  }
  const auto pivots = row_reduce(m);
  std::vector<Polynomial> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!m(r, k).is_zero()) terms.push_back({basis[k], m(r, k)});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

Restriction restrict_system(std::span<const Polynomial> forms, std::span<const Polynomial> subspace) {
  if (forms.empty()) throw InvalidArgument("restriction of an empty system");
  const RingPtr& ring = forms.front().ring();
  const std::size_t n = ring->nvars();
  Matrix m(ring->field(), subspace.size(), n);
  for (std::size_t r = 0; r < subspace.size(); ++r) {
    const auto& l = subspace[r];
    if (!same_ring(l.ring(), ring)) throw RingMismatch("subspace form from another ring");
    if (l.is_zero() || !l.is_homogeneous() || l.degree() != 1) {
      throw InvalidArgument("nonlinear_subspace", "subspace forms must be linear: " + l.to_string());
    }
    for (const auto& t : l.terms()) {
      for (std::size_t v = 0; v < n; ++v) {
        if (t.mono[v] == 1) m(r, v) = t.coeff;
      }
    }
  }
  const auto pivots = row_reduce(m);
  if (pivots.size() != subspace.size()) {
    throw InvalidArgument("dependent_subspace", "subspace forms are linearly dependent");
  }
  if (pivots.size() == n) throw InvalidArgument("the subspace is empty");
  std::vector<std::size_t> free;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(pivots.begin(), pivots.end(), v) == pivots.end()) {
      free.push_back(v);
      names.push_back(ring->name(v));
    }
  }
  Restriction out;
  out.ring = Ring::make(names, ring->field());
  out.embedding.assign(n, Polynomial(out.ring));
  for (std::size_t k = 0; k < free.size(); ++k) out.embedding[free[k]] = Polynomial::variable(out.ring, k);
  // x_pivot = -sum over free columns of the reduced row entries.
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Polynomial image(out.ring);
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (!m(r, free[k]).is_zero()) image -= Polynomial::variable(out.ring, k).scaled(m(r, free[k]));
    }
    out.embedding[pivots[r]] = image;
  }
  for (const auto& f : forms) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch("restricted forms from different rings");
    out.forms.push_back(f.substitute(out.embedding));
  }
  return out;
}

std::size_t line_restriction_rank(std::span<const Polynomial> quadrics,
                                  std::span<const FieldElement> p,
                                  std::span<const FieldElement> q) {
  if (quadrics.empty()) return 0;
  const RingPtr& ring = quadrics.front().ring();
  if (p.size() != ring->nvars() || q.size() != ring->nvars()) {
    throw InvalidArgument("points have the wrong number of coordinates");
  }
  if (projective_rank(p, q) < 2) throw InvalidArgument("coincident_points", "the points coincide");
  auto line = Ring::make({"s", "t"}, ring->field());
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    images.push_back(Polynomial::variable(line, 0).scaled(p[v]) +
                     Polynomial::variable(line, 1).scaled(q[v]));
  }
  const auto basis = monomials_of_degree(2, 2);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i].exponents()] = i;
  Matrix m(ring->field(), quadrics.size(), 3);
  for (std::size_t r = 0; r < quadrics.size(); ++r) {
    const auto& f = quadrics[r];
    if (!same_ring(f.ring(), ring)) throw RingMismatch("quadrics from different rings");
    if (!f.is_homogeneous() || f.degree() != 2) throw InvalidArgument("line restriction needs quadrics");
    const auto c = coefficients(f.substitute(images), basis, index);
    for (std::size_t k = 0; k < 3; ++k) m(r, k) = c[k];
  }
  return rank(std::move(m));
}

std::size_t point_rank(const std::vector<std::vector<FieldElement>>& points) {
  if (points.empty()) return 0;
  Matrix m(points.front().front().field(), points.size(), points.front().size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < points[r].size(); ++c) m(r, c) = points[r][c];
  }
  return rank(std::move(m));
}

FourPointReport four_point_span_check(const CorpusEntry& entry, std::size_t trials,
                                      std::uint64_t seed) {
  if (!entry.parametrization) {
    throw InvalidArgument("sampling_unavailable",
                          "no registered parametrization for " + entry.name);
  }
  if (entry.ideal.nvars() < 4) throw InvalidArgument("four points cannot span P^3 in this space");
  FourPointReport report;
  report.trials = trials;
  report.seed = seed;
  report.contains_conics = entry.conics == Certificate::Present;
  report.note = report.contains_conics
                    ? "reduced-point spot check only; the variety contains conics, so it is not "
                      "4-very ample"
                    : "reduced-point spot check only; not a certificate of 4-very ampleness";
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SeededRng rng(derive_seed(seed, trial));
    std::vector<std::vector<FieldElement>> points;
    while (points.size() < 4) {
      auto p = entry.parametrization->sample(rng);
      // A repeated point is rejected and resampled.
      const bool repeat = std::any_of(points.begin(), points.end(), [&](const auto& other) {
        return projective_rank(p, other) < 2;
      });
      if (!repeat) points.push_back(std::move(p));
    }
    const std::size_t r = point_rank(points);
    if (r < 4) report.failures.push_back({trial, points, r});
  }
  report.all_passed = report.failures.empty();
  return report;
}

FanoReport fano_lines(const Ideal& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  const std::size_t nv = ring->nvars();
  if (nv < 2) throw InvalidArgument("no lines in P^0");
  if (nv > 6) throw InvalidArgument("resource_cap", "line search is limited to n <= 5");
  if (!ideal.is_homogeneous()) throw InvalidArgument("line search needs a homogeneous ideal");
  FanoReport report;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      std::vector<std::size_t> others;
      for (std::size_t k = 0; k < nv; ++k) {
        if (k != i && k != j) others.push_back(k);
      }
      std::vector<std::string> names;
      for (std::size_t k : others) names.push_back("a" + std::to_string(k));
      for (std::size_t k : others) names.push_back("b" + std::to_string(k));
      const RingPtr chart = Ring::make(names, ring->field());
      std::vector<std::string> with_line = names;
      with_line.push_back("s");
      with_line.push_back("t");
      const RingPtr big = Ring::make(with_line, ring->field());
      const std::size_t m = others.size();
      const Polynomial s = Polynomial::variable(big, 2 * m);
      const Polynomial t = Polynomial::variable(big, 2 * m + 1);
      std::vector<Polynomial> images(nv, Polynomial(big));
      images[i] = s;
      images[j] = t;
      for (std::size_t k = 0; k < m; ++k) {
        images[others[k]] = s * Polynomial::variable(big, k) + t * Polynomial::variable(big, m + k);
      }
      // Coefficients of each F(s p + t q) as a binary form.
      std::vector<Polynomial> conditions;
      for (const auto& f : ideal.generators()) {
        std::map<std::pair<int, int>, std::vector<Term>> by_st;
        const Polynomial restricted = f.substitute(images);
        for (const auto& term : restricted.terms()) {
          auto e = term.mono.exponents();
          const std::pair<int, int> key{e[2 * m], e[2 * m + 1]};
          e.resize(2 * m);
          by_st[key].push_back({Monomial(std::span<const int>(e)), term.coeff});
        }
        for (auto& [key, terms] : by_st) conditions.emplace_back(chart, std::move(terms));
      }
      const GroebnerBasis gb = groebner_basis(Ideal(chart, std::move(conditions)), options);
      FanoChart c{i, j, gb.elements(), gb.is_unit()};
      report.contains_lines = report.contains_lines || !c.empty;
      report.charts.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace syzflip
