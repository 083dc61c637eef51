#include "syzflip/hilbert.hpp"

#include <algorithm>

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly times_t(const Poly& a) {
  if (a.empty()) return {};
  Poly r(a.size() + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + 1] = a[i];
  return r;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Pivot recursion from 0 -> S/(M:x)(-1) -> S/M -> S/(M + (x)) -> 0, so
// N(M) = N(M + (x)) + t N(M : x) over the common denominator (1 - t)^n.
Poly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimal_generators(std::move(gens));
  if (gens.empty()) return {1};
  // Base case: pairwise coprime generators give a product of (1 - t^deg).
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) {
      coprime = gens[i].coprime(gens[j]);
    }
  }
  if (coprime) {
    Poly r{1};
    for (const auto& g : gens) {
      Poly f(static_cast<std::size_t>(g.degree()) + 1, 0);
      f[0] = 1;
      f[static_cast<std::size_t>(g.degree())] -= 1;
      r = multiply(r, f);
    }
    return r;
  }
  // Pivot on the variable occurring in the most non-trivial generators.
  std::vector<int> counts(nvars, 0);
  for (const auto& g : gens) {
    if (g.degree() <= 1) continue;
    for (std::size_t v = 0; v < nvars; ++v) counts[v] += g[v] > 0 ? 1 : 0;
  }
  const std::size_t pivot = static_cast<std::size_t>(
      std::max_element(counts.begin(), counts.end()) - counts.begin());
  const Monomial x = Monomial::variable(nvars, pivot);

  std::vector<Monomial> with_x = gens;
  with_x.push_back(x);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    if (g[pivot] > 0) {
      colon.push_back(g / x);
    } else {
      colon.push_back(g);
    }
  }
  const Poly a = numerator_rec(std::move(with_x), nvars);
  const Poly b = numerator_rec(std::move(colon), nvars);
  return add(a, times_t(b));
}

}  // namespace

std::vector<mpz_class> hilbert_numerator(std::span<const Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators) {
    if (g.size() != nvars) throw RingMismatch("monomial with wrong variable count");
    if (g.is_one()) return {};
  }
  return numerator_rec(std::vector<Monomial>(generators.begin(), generators.end()), nvars);
}

mpz_class binomial_polynomial(long n, long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  mpz_class den = 1;
  for (long i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  return num / den;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < k || n < 0) return 0;
  return binomial_polynomial(n, k);
}

HilbertData hilbert_data_from_numerator(std::vector<mpz_class> numerator, std::size_t nvars) {
  HilbertData h;
  h.nvars = nvars;
  trim(numerator);
  h.numerator = numerator;
  Poly reduced = numerator;
  int pole = static_cast<int>(nvars);
  // Synthetic division by (1 - t) while t = 1 is a root.
  while (!reduced.empty() && pole > 0) {
    mpz_class at_one = 0;
    for (const auto& c : reduced) at_one += c;
    if (at_one != 0) break;
    Poly q(reduced.size() - 1, 0);
    mpz_class running = 0;
    for (std::size_t i = 0; i + 1 < reduced.size(); ++i) {
      running += reduced[i];
      q[i] = running;
    }
    reduced = std::move(q);
    trim(reduced);
    --pole;
  }
  h.reduced_numerator = reduced;
  if (reduced.empty()) {
    h.affine_dimension = -1;
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  h.affine_dimension = pole;
  h.dimension = pole - 1;
  h.degree = 0;
  for (const auto& c : reduced) h.degree += c;
  return h;
}

mpz_class HilbertData::hilbert_function(long k) const {
  mpz_class v = 0;
  const long n = static_cast<long>(nvars);
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    v += numerator[i] * binomial(k - static_cast<long>(i) + n - 1, n - 1);
  }
  return v;
}

mpz_class HilbertData::hilbert_polynomial(long k) const {
  if (affine_dimension <= 0) return 0;
  mpz_class v = 0;
  const long d = affine_dimension;
  for (std::size_t i = 0; i < reduced_numerator.size(); ++i) {
    v += reduced_numerator[i] * binomial_polynomial(k - static_cast<long>(i) + d - 1, d - 1);
  }
  return v;
}

HilbertData hilbert_data(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("hilbert_data needs a homogeneous ideal");
  const GroebnerBasis gb = groebner_basis(ideal, MonomialOrder::grevlex(), options);
  const auto leads = gb.leading_monomials();
  return hilbert_data_from_numerator(hilbert_numerator(leads, ideal.nvars()), ideal.nvars());
}

}  // namespace syzflip
