#include "syzflip/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "syzflip/error.hpp"
#include "syzflip/hilbert.hpp"

namespace syzflip {

namespace {

void check_cap(std::size_t nvars, const std::string& what) {
  if (nvars > kCorpusMaxVariables) {
    throw InvalidArgument("resource_cap", what + " needs " + std::to_string(nvars) +
                                              " variables; the cap is " +
                                              std::to_string(kCorpusMaxVariables));
  }
}

Polynomial var(const RingPtr& ring, std::size_t i) { return Polynomial::variable(ring, i); }

// Every generator vanishes identically on the parametrization.
void verify(const CorpusEntry& entry) {
  if (!entry.parametrization) return;
  for (const auto& g : entry.ideal.generators()) {
    if (!g.substitute(entry.parametrization->forms).is_zero()) {
      throw InvalidArgument("corpus generator " + g.to_string() + " does not vanish on " +
                            entry.name);
    }
  }
}

}  // namespace

std::vector<FieldElement> Parametrization::evaluate(std::span<const FieldElement> parameters) const {
  std::vector<FieldElement> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(f.evaluate(parameters));
  return out;
}

std::vector<FieldElement> Parametrization::sample(SeededRng& rng, long range) const {
  for (;;) {
    std::vector<FieldElement> params;
    for (std::size_t i = 0; i < source->nvars(); ++i) {
      params.emplace_back(source->field(), rng.uniform(-range, range));
    }
    auto point = evaluate(params);
    if (std::any_of(point.begin(), point.end(), [](const FieldElement& c) { return !c.is_zero(); })) {
      return point;
    }
  }
}

std::string to_string(Certificate c) {
  switch (c) {
    case Certificate::Absent:
      return "absent";
    case Certificate::Present:
      return "present";
    case Certificate::Unknown:
      break;
  }
  return "unknown";
}

CorpusEntry rational_normal_curve(int d, const Field& field) {
  if (d < 1) throw InvalidArgument("rational normal curve degree must be positive");
  check_cap(static_cast<std::size_t>(d) + 1, "rational-normal-curve");
  auto ring = Ring::make_indexed("x", static_cast<std::size_t>(d) + 1, field);
  std::vector<Polynomial> gens;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      gens.push_back(var(ring, i) * var(ring, j + 1) - var(ring, j) * var(ring, i + 1));
    }
  }
  auto source = Ring::make_indexed("s", 2, field);
  Parametrization p{source, {}};
  for (int i = 0; i <= d; ++i) {
    p.forms.push_back(var(source, 0).pow(static_cast<unsigned>(d - i)) *
                      var(source, 1).pow(static_cast<unsigned>(i)));
  }
  CorpusEntry entry{"rational-normal-curve",
                    "rational-normal-curve(" + std::to_string(d) + ")",
                    Ideal(ring, std::move(gens)),
                    2,
                    std::move(p),
                    d >= 2 ? Certificate::Absent : Certificate::Present,
                    d >= 3 ? Certificate::Absent
                           : (d == 2 ? Certificate::Present : Certificate::Absent),
                    "irreducible curve of degree " + std::to_string(d) +
                        "; a line or conic on it would be the whole curve",
                    std::nullopt};
  verify(entry);
  return entry;
}

CorpusEntry veronese(int n, int d, const Field& field) {
  if (n < 1 || d < 2) throw InvalidArgument("veronese needs n >= 1 and d >= 2");
  const auto monos = monomials_of_degree(static_cast<std::size_t>(n) + 1, d);
  check_cap(monos.size(), "veronese");
  auto ring = Ring::make_indexed("x", monos.size(), field);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i].exponents()] = i;
  // z_a z_b - z_c z_d for a + b = c + d, grouped by the product.
  std::map<std::vector<int>, std::vector<std::pair<std::size_t, std::size_t>>> by_product;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    for (std::size_t j = i; j < monos.size(); ++j) {
      by_product[(monos[i] * monos[j]).exponents()].emplace_back(i, j);
    }
  }
  std::vector<Polynomial> gens;
  for (const auto& [product, pairs] : by_product) {
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      gens.push_back(var(ring, pairs[0].first) * var(ring, pairs[0].second) -
                     var(ring, pairs[k].first) * var(ring, pairs[k].second));
    }
  }
  Ideal ideal = minimalize(Ideal(ring, std::move(gens)));
  auto source = Ring::make_indexed("s", static_cast<std::size_t>(n) + 1, field);
  Parametrization p{source, {}};
  for (const auto& m : monos) p.forms.push_back(Polynomial::monomial(source, m, FieldElement::one(field)));
  CorpusEntry entry{"veronese",
                    "veronese(" + std::to_string(n) + "," + std::to_string(d) + ")",
                    std::move(ideal),
                    2,
                    std::move(p),
                    Certificate::Absent,
                    d == 2 ? Certificate::Present : Certificate::Absent,
                    d == 2 ? "images of lines of P^n are conics; no lines since d >= 2"
                           : "curves on v_d(P^n) have degree divisible by d >= 3",
                    std::nullopt};
  verify(entry);
  return entry;
}

CorpusEntry segre(int a, int b, const Field& field) {
  if (a < 1 || b < 1) throw InvalidArgument("segre needs a, b >= 1");
  const std::size_t rows = static_cast<std::size_t>(a) + 1;
  const std::size_t cols = static_cast<std::size_t>(b) + 1;
  check_cap(rows * cols, "segre");
  auto ring = Ring::make_indexed("x", rows * cols, field);
  auto at = [&](std::size_t i, std::size_t j) { return var(ring, i * cols + j); };
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = i + 1; k < rows; ++k) {
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t l = j + 1; l < cols; ++l) {
          gens.push_back(at(i, j) * at(k, l) - at(i, l) * at(k, j));
        }
      }
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < rows; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) names.push_back("t" + std::to_string(j));
  auto source = Ring::make(names, field);
  Parametrization p{source, {}};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) p.forms.push_back(var(source, i) * var(source, rows + j));
  }
  CorpusEntry entry{"segre",
                    "segre(" + std::to_string(a) + "," + std::to_string(b) + ")",
                    Ideal(ring, std::move(gens)),
                    2,
                    std::move(p),
                    Certificate::Present,
                    Certificate::Present,
                    "each factor P^a x {pt} contains lines",
                    std::nullopt};
  verify(entry);
  return entry;
}

bool is_smooth_complete_intersection(const Ideal& ideal, const GroebnerOptions& options) {
  const auto& f = ideal.generators();
  const auto& ring = ideal.ring();
  const std::size_t c = f.size();
  const std::size_t n = ring->nvars();
  if (c == 0) return true;
  // Partial derivatives.
  std::vector<std::vector<Polynomial>> jac(c, std::vector<Polynomial>(n, Polynomial(ring)));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Term> terms;
      for (const auto& t : f[i].terms()) {
        if (t.mono[v] == 0) continue;
        auto e = t.mono.exponents();
        const long factor = e[v]--;
        terms.push_back({Monomial(std::span<const int>(e)), t.coeff * FieldElement(ring->field(), factor)});
      }
      jac[i][v] = Polynomial(ring, std::move(terms));
    }
  }
  // c x c minors by Laplace expansion over column subsets.
  std::function<Polynomial(std::size_t, const std::vector<std::size_t>&)> minor =
      [&](std::size_t row, const std::vector<std::size_t>& columns) -> Polynomial {
    if (row == c) return Polynomial::constant(ring, 1);
    Polynomial sum(ring);
    for (std::size_t k = 0; k < columns.size(); ++k) {
      std::vector<std::size_t> rest = columns;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial term = jac[row][columns[k]] * minor(row + 1, rest);
      sum += k % 2 == 0 ? term : -term;
    }
    return sum;
  };
  std::vector<Polynomial> gens = f;
  std::vector<std::size_t> choice;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (choice.size() == c) {
      gens.push_back(minor(0, choice));
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      choice.push_back(v);
      choose(v + 1);
      choice.pop_back();
    }
  };
  choose(0);
  return hilbert_data(Ideal(ring, std::move(gens)), options).dimension < 0;
}

CorpusEntry complete_intersection(std::vector<int> degrees, std::uint64_t seed, int n,
                                  const Field& field) {
  if (degrees.empty()) throw InvalidArgument("complete intersection needs at least one degree");
  if (n < 1) throw InvalidArgument("complete intersection needs n >= 1");
  if (static_cast<int>(degrees.size()) > n) {
    throw InvalidArgument("more forms than the dimension of P^n");
  }
  for (int d : degrees) {
    if (d < 1) throw InvalidArgument("complete intersection degrees must be positive");
  }
  check_cap(static_cast<std::size_t>(n) + 1, "complete-intersection");
  auto ring = Ring::make_indexed("x", static_cast<std::size_t>(n) + 1, field);
  std::string name = "complete-intersection(";
  for (std::size_t i = 0; i < degrees.size(); ++i) name += (i ? "," : "") + std::to_string(degrees[i]);
  name += ";seed=" + std::to_string(seed) + ")";

  Ideal ideal(ring);
  bool smooth = false;
  for (std::uint64_t attempt = 0; attempt < 16; ++attempt) {
    SeededRng rng(derive_seed(seed, attempt));
    std::vector<Polynomial> gens;
    for (int d : degrees) {
      std::vector<Term> terms;
      for (const auto& m : monomials_of_degree(ring->nvars(), d)) {
        terms.push_back({m, FieldElement(field, rng.uniform(-3, 3))});
      }
      gens.emplace_back(ring, std::move(terms));
    }
    ideal = Ideal(ring, std::move(gens));
    if (ideal.generators().size() != degrees.size()) continue;
    const HilbertData h = hilbert_data(ideal);
    if (h.dimension != n - static_cast<int>(degrees.size())) continue;
    smooth = is_smooth_complete_intersection(ideal);
    if (smooth) break;
  }
  const int max_degree = *std::max_element(degrees.begin(), degrees.end());
  const HilbertData h = hilbert_data(ideal);
  // A smooth complete intersection of positive dimension is connected, hence
  // irreducible; as a curve of degree >= 3 it holds no lines or conics.
  const bool irreducible_curve = smooth && h.dimension == 1;
  const Certificate by_degree =
      irreducible_curve && h.degree >= 3 ? Certificate::Absent : Certificate::Unknown;
  CorpusEntry entry{"complete-intersection",
                    name,
                    std::move(ideal),
                    max_degree,
                    std::nullopt,
                    by_degree,
                    by_degree,
                    irreducible_curve ? "smooth irreducible curve of degree " + h.degree.get_str()
                                      : "no certificate registered",
                    smooth};
  return entry;
}

}  // namespace syzflip
