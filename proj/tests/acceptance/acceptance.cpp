#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "../support/random_poly.hpp"
#include "syzflip/cohomology.hpp"
#include "syzflip/conditions.hpp"
#include "syzflip/corpus.hpp"
#include "syzflip/error.hpp"
#include "syzflip/flipcalc.hpp"
#include "syzflip/hilbert.hpp"
#include "syzflip/random.hpp"
#include "syzflip/secant.hpp"
#include "syzflip/syzygy.hpp"
#include "syzflip_cli/commands.hpp"

namespace syzflip {
namespace {

// Pinned limits. Everything else is compared exactly.
constexpr double kK2Seconds = 5.0;
constexpr double kSecantSeconds = 120.0;
constexpr double kScanSeconds = 600.0;
constexpr std::uint64_t kSeed = 0;

using Point = std::vector<FieldElement>;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// ---- oracles ----

Polynomial var(const RingPtr& ring, std::size_t i) { return Polynomial::variable(ring, i); }

Polynomial det3(const std::vector<std::vector<Polynomial>>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Polynomial hankel_det(const RingPtr& ring) {
  std::vector<std::vector<Polynomial>> m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i].push_back(var(ring, i + j));
  }
  return det3(m);
}

// v2(P2) coordinates follow x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
Polynomial symmetric_det(const RingPtr& ring) {
  const std::size_t index[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  std::vector<std::vector<Polynomial>> m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i].push_back(var(ring, index[i][j]));
  }
  return det3(m);
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.scaled(b.leading_coeff()) == b.scaled(a.leading_coeff());
}

bool vanishes(std::span<const Polynomial> polys, std::span<const FieldElement> p) {
  return std::all_of(polys.begin(), polys.end(), [&](const Polynomial& f) { return f.evaluate(p).is_zero(); });
}

Point combine(const Point& a, const Point& b, long lambda, long mu) {
  Point out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out.push_back(a[i] * FieldElement(a[i].field(), lambda) + b[i] * FieldElement(b[i].field(), mu));
  }
  return out;
}

long nonzero(SeededRng& rng, long range) {
  long v = 0;
  while (v == 0) v = rng.uniform(-range, range);
  return v;
}

Point chord_point(const Parametrization& param, SeededRng& rng, Point* a_out = nullptr,
                  Point* b_out = nullptr) {
  const Point a = param.sample(rng);
  const Point b = param.sample(rng);
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  return combine(a, b, nonzero(rng, 5), nonzero(rng, 5));
}

Point general_point(const Field& field, std::size_t n, SeededRng& rng) {
  for (;;) {
    Point p;
    bool zero = true;
    for (std::size_t i = 0; i < n; ++i) {
      const long v = rng.uniform(-20, 20);
      zero = zero && v == 0;
      p.emplace_back(field, v);
    }
    if (!zero) return p;
  }
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

mpz_class binomial(long top, long bottom) {
  if (bottom < 0 || top < bottom) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

// ---- shared state ----

struct SecantCase {
  CorpusEntry entry;
  std::function<Polynomial(const RingPtr&)> oracle;  // empty for Sec = P^n
  bool fills = false;
  int dimension = 0;
  std::optional<long> degree;
  int deficiency = 0;
};

std::vector<SecantCase> secant_cases() {
  return {
      {rational_normal_curve(3), {}, true, 3, std::nullopt, 0},
      {rational_normal_curve(4), hankel_det, false, 3, 3, 0},
      {veronese(2, 2), symmetric_det, false, 4, 3, 1},
  };
}

std::map<std::string, SecantReport> secant_cache;

const SecantReport& cached_secant(const CorpusEntry& e) {
  auto it = secant_cache.find(e.name);
  if (it == secant_cache.end()) it = secant_cache.emplace(e.name, secant_report(e.ideal)).first;
  return it->second;
}

// ---- criteria ----

Verdict k2_verdicts() {
  Verdict v;
  const std::vector<std::pair<CorpusEntry, bool>> cases{
      {rational_normal_curve(3), true},
      {rational_normal_curve(4), true},
      {complete_intersection({2, 2}, kSeed), false},
  };
  for (const auto& [entry, expected] : cases) {
    const auto start = Clock::now();
    const KdReport r = check_kd(entry.ideal.generators(), 2);
    const double s = seconds_since(start);
    v.require(r.holds == expected, entry.name + " verdict " + (r.holds ? "true" : "false"));
    v.require(s < kK2Seconds, entry.name + " took " + fmt_seconds(s));
    v.note(entry.name + "=" + (r.holds ? "true" : "false") + " in " + fmt_seconds(s));
  }
  return v;
}

std::vector<CorpusEntry> n2_corpus() {
  std::vector<CorpusEntry> out = cli::default_corpus(Field::rationals(), kSeed);
  out.push_back(rational_normal_curve(5));
  out.push_back(segre(1, 3));
  out.push_back(complete_intersection({2, 2}, kSeed + 1));
  out.push_back(complete_intersection({2, 2}, 3, 4));
  return out;
}

Verdict n2_implies_k2() {
  Verdict v;
  int with_n2 = 0;
  const auto corpus = n2_corpus();
  for (const auto& e : corpus) {
    const N2Report n2 = check_n2(e.ideal);
    if (!n2.holds()) continue;
    ++with_n2;
    const bool k2 = check_kd(e.ideal.generators(), 2).holds;
    v.require(k2, "counterexample " + e.name);
  }
  v.note(std::to_string(with_n2) + "/" + std::to_string(corpus.size()) + " entries satisfy N2, 0 counterexamples required");
  return v;
}

Verdict secant_ideals() {
  Verdict v;
  SeededRng rng(derive_seed(kSeed, 3));
  for (const auto& c : secant_cases()) {
    const auto start = Clock::now();
    const SecantReport& r = cached_secant(c.entry);
    const double s = seconds_since(start);
    const std::string& name = c.entry.name;
    v.require(s < kSecantSeconds, name + " took " + fmt_seconds(s));
    v.require(r.fills_space == c.fills, name + " fills_space");
    v.require(r.secant_dimension == c.dimension, name + " dim " + std::to_string(r.secant_dimension));
    v.require(r.deficiency == c.deficiency, name + " deficiency " + std::to_string(r.deficiency));
    v.require(r.secant_degree.has_value() == c.degree.has_value(), name + " degree presence");
    if (c.degree && r.secant_degree) v.require(*r.secant_degree == *c.degree, name + " degree");
    if (c.oracle) {
      const auto& gens = r.secant.generators();
      v.require(gens.size() == 1, name + " expected one generator");
      const Polynomial det = c.oracle(r.secant.ring());
      v.require(gens.size() == 1 && proportional(gens[0], det), name + " differs from the determinant");
    } else {
      v.require(r.secant.is_zero(), name + " expected the zero ideal");
    }
    int chord_ok = 0;
    for (int t = 0; t < 50; ++t) {
      const Point p = chord_point(*c.entry.parametrization, rng);
      if (vanishes(r.secant.generators(), p)) ++chord_ok;
    }
    v.require(chord_ok == 50, name + " chord points " + std::to_string(chord_ok) + "/50");
    v.note(name + " dim " + std::to_string(r.secant_dimension) + " in " + fmt_seconds(s));
  }
  return v;
}

Verdict deficiency_formula() {
  Verdict v;
  for (const auto& c : secant_cases()) {
    const SecantReport& r = cached_secant(c.entry);
    const RingPtr& ring = c.entry.ideal.ring();
    const std::vector<Polynomial> quadrics = quadrics_of(c.entry.ideal);
    std::optional<Ideal> sigma;
    if (c.oracle) sigma.emplace(ring, std::vector<Polynomial>{c.oracle(ring)});
    const Ideal image = kernel_of_map(quadrics, sigma ? &*sigma : nullptr, "y");
    const int dim_y = hilbert_data(image).dimension;
    const std::string& name = c.entry.name;
    v.require(r.formula_consistent, name + " formula_consistent false");
    v.require(dim_y == r.image_dimension, name + " dim Y " + std::to_string(dim_y) + " vs " +
                                              std::to_string(r.image_dimension));
    v.require(2 * r.deficiency == 2 * r.r - dim_y, name + " 2*delta != 2r - dim Y");
    v.note(name + " delta " + std::to_string(r.deficiency) + " dimY " + std::to_string(dim_y));
  }
  return v;
}

Verdict fiber_dichotomy() {
  Verdict v;
  SeededRng rng(derive_seed(kSeed, 5));
  for (const auto& c : secant_cases()) {
    if (!c.oracle) continue;
    const CorpusEntry& e = c.entry;
    const RingPtr& ring = e.ideal.ring();
    const Polynomial det = c.oracle(ring);
    const std::vector<Polynomial> quadrics = quadrics_of(e.ideal);
    int on = 0;
    int off = 0;
    int checked = 0;
    while (checked < 20) {
      Point a;
      Point b;
      const bool chord = checked % 2 == 0;
      const Point p = chord ? chord_point(*e.parametrization, rng, &a, &b)
                            : general_point(ring->field(), ring->nvars(), rng);
      if (vanishes(quadrics, p)) continue;
      ++checked;
      const FiberAnalysis f = analyze_fiber(quadrics, p, 2);
      const auto& gens = f.fiber.generators();
      const std::string where = e.name + " point " + std::to_string(checked);
      v.require(vanishes(gens, p), where + ": fiber misses p");
      if (det.evaluate(p).is_zero()) {
        ++on;
        const int k = f.fiber_data.dimension;
        v.require(f.kind == FiberAnalysis::Kind::LinearSpace, where + ": on Sec but " + to_string(f.kind));
        v.require(f.linear && k >= 1 && f.fiber_data.degree == 1, where + ": fiber not a linear P^k");
        v.require(f.intersection_data.dimension == k - 1 && f.intersection_data.degree == 2,
                  where + ": intersection with X is not a quadric hypersurface");
        if (chord) v.require(vanishes(gens, a) && vanishes(gens, b), where + ": chord endpoints missing");
      } else {
        ++off;
        v.require(f.kind == FiberAnalysis::Kind::ReducedPoint, where + ": off Sec but " + to_string(f.kind));
        v.require(f.fiber_data.dimension == 0 && f.fiber_data.degree == 1, where + ": not a reduced point");
      }
    }
    v.note(e.name + " " + std::to_string(on) + " on Sec, " + std::to_string(off) + " off");
  }
  return v;
}

// Quadrics restricted to the line through p and q, as forms in s, t.
std::vector<Polynomial> restrict_to_line(std::span<const Polynomial> quadrics, const Point& p, const Point& q,
                                         const RingPtr& line) {
  std::vector<Polynomial> images;
  const Polynomial s = var(line, 0);
  const Polynomial t = var(line, 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    images.push_back(s.scaled(p[i]) + t.scaled(q[i]));
  }
  std::vector<Polynomial> out;
  for (const auto& f : quadrics) out.push_back(f.substitute(images));
  return out;
}

std::size_t oracle_rank(const std::vector<Polynomial>& binary_quadrics) {
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& f : binary_quadrics) {
    std::vector<mpq_class> row(3, 0);
    for (const auto& term : f.terms()) row[static_cast<std::size_t>(term.mono[1])] = term.coeff.rational();
    rows.push_back(row);
  }
  return rational_rank(rows);
}

Verdict line_restriction() {
  Verdict v;
  const CorpusEntry e = rational_normal_curve(4);
  const RingPtr& ring = e.ideal.ring();
  const std::vector<Polynomial> quadrics = quadrics_of(e.ideal);
  const Polynomial det = hankel_det(ring);
  const RingPtr line = Ring::make({"s", "t"}, ring->field());
  SeededRng rng(derive_seed(kSeed, 6));
  int accepted = 0;
  int meets_x = 0;
  int inside_sec = 0;
  while (accepted < 200 && accepted + meets_x + inside_sec < 2000) {
    const Point p = general_point(ring->field(), ring->nvars(), rng);
    const Point q = general_point(ring->field(), ring->nvars(), rng);
    if (point_rank({p, q}) < 2) continue;
    const std::vector<Polynomial> restricted = restrict_to_line(quadrics, p, q, line);
    if (hilbert_data(Ideal(line, restricted)).dimension != -1) {
      ++meets_x;
      continue;
    }
    const std::array<Polynomial, 1> sigma{det};
    if (restrict_to_line(sigma, p, q, line)[0].is_zero()) {
      ++inside_sec;
      continue;
    }
    ++accepted;
    const std::size_t rank = line_restriction_rank(quadrics, p, q);
    v.require(rank == 3, "line " + std::to_string(accepted) + " rank " + std::to_string(rank));
    v.require(oracle_rank(restricted) == rank, "line " + std::to_string(accepted) + " oracle rank disagrees");
  }
  v.require(accepted == 200, "only " + std::to_string(accepted) + " admissible lines");
  int secant_lines = 0;
  while (secant_lines < 200) {
    const Point a = e.parametrization->sample(rng);
    const Point b = e.parametrization->sample(rng);
    if (point_rank({a, b}) < 2) continue;
    ++secant_lines;
    const std::size_t rank = line_restriction_rank(quadrics, a, b);
    v.require(rank <= 2, "secant line " + std::to_string(secant_lines) + " rank " + std::to_string(rank));
    v.require(oracle_rank(restrict_to_line(quadrics, a, b, line)) == rank,
              "secant line " + std::to_string(secant_lines) + " oracle rank disagrees");
  }
  v.note(std::to_string(accepted) + " general lines rank 3 (" + std::to_string(meets_x) + " met X, " +
         std::to_string(inside_sec) + " in Sec rejected), " + std::to_string(secant_lines) + " secant lines rank <= 2");
  return v;
}

Verdict cohomology_sanity() {
  Verdict v;
  int cells = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const RingPtr ring = Ring::make_indexed("x", n + 1);
    const GradedModule m = GradedModule::quotient(Ideal(ring));
    for (long k = -9; k <= 9; ++k) {
      const std::vector<long> h = m.sheaf_cohomology(k);
      const long nn = static_cast<long>(n);
      std::vector<mpz_class> expected(n + 1, 0);
      expected[0] = k >= 0 ? binomial(nn + k, nn) : mpz_class(0);
      expected[n] = k <= -nn - 1 ? binomial(-k - 1, nn) : mpz_class(0);
      if (n == 0) expected[0] = 1;
      const std::string where = "P^" + std::to_string(n) + " k=" + std::to_string(k);
      v.require(h.size() == n + 1, where + ": wrong length");
      mpz_class chi = 0;
      for (std::size_t i = 0; i < h.size() && i <= n; ++i) {
        v.require(mpz_class(h[i]) == expected[i], where + ": h^" + std::to_string(i));
        chi += (i % 2 == 0 ? 1 : -1) * mpz_class(h[i]);
      }
      v.require(chi == m.hilbert_polynomial(k), where + ": Euler characteristic");
      ++cells;
    }
  }
  for (const auto& e : {rational_normal_curve(3), rational_normal_curve(4), veronese(2, 2)}) {
    for (int a = 1; a <= 2; ++a) {
      const GradedModule m = GradedModule::ideal(ideal_power_saturated(e.ideal, a));
      for (long k = -4; k <= 6; ++k) {
        const CohomologyCell c = cohomology_cell(m, a, k);
        mpz_class chi = 0;
        for (std::size_t i = 0; i < c.h.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * mpz_class(c.h[i]);
        const std::string where = e.name + " a=" + std::to_string(a) + " k=" + std::to_string(k);
        v.require(chi == m.hilbert_polynomial(k), where + ": Euler characteristic");
        v.require(c.euler_consistent && c.h0_consistent, where + ": cell cross-check");
        ++cells;
      }
    }
  }
  v.note(std::to_string(cells) + " cells");
  return v;
}

Verdict vanishing_scans() {
  Verdict v;
  const auto start = Clock::now();
  struct Scan {
    CorpusEntry entry;
    std::vector<int> powers;
    long window;
    VanishingVariant variant;
  };
  const std::vector<Scan> scans{
      {rational_normal_curve(3), {1, 2}, 4, VanishingVariant::Little},
      {rational_normal_curve(4), {1, 2}, 3, VanishingVariant::Little},
      {rational_normal_curve(4), {2}, 0, VanishingVariant::Second},
  };
  for (const auto& s : scans) {
    const VanishingScan r = vanishing_scan(s.entry.ideal, 2, s.powers, s.window, s.variant);
    const std::string label =
        s.entry.name + (s.variant == VanishingVariant::Little ? " little" : " second");
    for (const auto& [a, ok] : r.hypothesis) v.require(ok, label + " a=" + std::to_string(a) + ": hypothesis fails");
    for (const auto& x : r.violations) {
      v.require(false, label + " a=" + std::to_string(x.a) + " k=" + std::to_string(x.k) + ": h^" +
                           std::to_string(x.i) + "=" + std::to_string(x.value));
    }
    v.require(r.inconsistent.empty(), label + ": Euler cross-check failed on " +
                                          std::to_string(r.inconsistent.size()) + " cells");
    v.note(label + " " + std::to_string(r.violations.size()) + " violations");
  }
  const double s = seconds_since(start);
  v.require(s < kScanSeconds, "scans took " + fmt_seconds(s));
  return v;
}

std::array<mpq_class, 3> kv_lhs_oracle(long nv, long rv, long kv) {
  const mpq_class nn(nv), rr(rv), kk(kv);
  return {2 * kk - 1 + nn + 1, -kk - (nn - rr - 1), -2 - (nn - 2 * rr - 2)};
}

std::array<mpq_class, 3> kv_rhs_oracle(long nv, long rv, long kv) {
  const mpq_class m(nv - 2 * rv);
  const mpq_class alpha = mpq_class(kv + nv - rv - 1) / m;
  return {(2 * alpha - 1) * m + 2, -alpha * m, -m};
}

Verdict flip_arithmetic() {
  Verdict v;
  v.require(verify_kv_rewrite(), "symbolic rewrite fails");
  const KvRewrite symbolic = kv_rewrite(kv_base());
  int grid = 0;
  for (long r = 1; 2 * r + 3 <= 12; ++r) {
    for (long n = 2 * r + 3; n <= 12; ++n) {
      for (long k = 2; k <= 10; ++k) {
        const KvRewrite numeric = kv_rewrite(kv_base(k), n, r, k);
        const auto lhs = kv_lhs_oracle(n, r, k);
        const auto rhs = kv_rhs_oracle(n, r, k);
        bool ok = numeric.holds;
        for (std::size_t i = 0; i < 3; ++i) {
          ok = ok && numeric.lhs[i] == Scalar(lhs[i]) && numeric.rhs[i] == Scalar(rhs[i]) &&
               lhs[i] == rhs[i] && symbolic.lhs[i].evaluate(n, r, k) == lhs[i];
        }
        v.require(ok, "n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k));
        ++grid;
      }
    }
  }
  const std::string canonical = canonical_class(Space::M2tilde).display();
  v.require(canonical == "O(−n−1, n−r−1, n−2r−2)", "canonical class " + canonical);
  const std::string pullback = pullback_statement(DivisorClass(Space::M2, {3, -2}));
  v.require(pullback == "h*O_{M₂}(3H−2E) = O_{M̃₂}(3H−2E₁−E₂)", "pullback " + pullback);
  v.note(std::to_string(grid) + " grid points; " + canonical + "; " + pullback);
  return v;
}

Verdict engine_properties() {
  Verdict v;
  const auto corpus = cli::default_corpus(Field::rationals(), kSeed);
  SeededRng rng(derive_seed(kSeed, 10));
  int syzygies_checked = 0;
  for (const auto& e : corpus) {
    const GroebnerBasis reference = groebner_basis(e.ideal);
    for (int t = 0; t < 20; ++t) {
      std::vector<Polynomial> gens = e.ideal.generators();
      for (std::size_t i = gens.size(); i > 1; --i) {
        std::swap(gens[i - 1], gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(i) - 1))]);
      }
      const bool same = groebner_basis(Ideal(e.ideal.ring(), gens)) == reference;
      v.require(same, e.name + " permutation " + std::to_string(t));
    }
    const auto& gens = e.ideal.generators();
    for (const auto& s : syzygies(gens)) {
      v.require(contract(s, gens).is_zero(), e.name + " syzygy does not contract to zero");
      ++syzygies_checked;
    }
    const Resolution res = free_resolution(e.ideal, 3);
    for (std::size_t i = 1; i < res.maps.size(); ++i) {
      const GradedMap& prev = res.maps[i - 1];
      for (const auto& column : res.maps[i].columns) {
        std::vector<Polynomial> image(prev.target_shifts.size(), Polynomial(res.ring));
        for (std::size_t j = 0; j < column.size(); ++j) {
          for (std::size_t row = 0; row < image.size(); ++row) image[row] += column[j] * prev.columns[j][row];
        }
        v.require(std::all_of(image.begin(), image.end(), [](const Polynomial& f) { return f.is_zero(); }),
                  e.name + " resolution map " + std::to_string(i) + " does not compose to zero");
        ++syzygies_checked;
      }
    }
  }
  testing::Rng prng(derive_seed(kSeed, 11));
  int members = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RingPtr ring = Ring::make_indexed("x", 3);
    std::vector<Polynomial> gens;
    const long count = prng.uniform(1, 3);
    while (static_cast<long>(gens.size()) < count) {
      auto f = testing::random_polynomial(prng, ring, 4, 3, true);
      if (!f.is_zero() && f.degree() > 0) gens.push_back(f);
    }
    const Ideal ideal(ring, gens);
    const int d = static_cast<int>(prng.uniform(3, 5));
    Polynomial f(ring);
    if (trial % 2 == 0) {
      for (const auto& g : ideal.generators()) {
        if (g.degree() > d) continue;
        auto c = testing::random_polynomial(prng, ring, 3, d - g.degree(), true);
        if (!c.is_zero() && c.degree() == d - g.degree()) f += c * g;
      }
    } else {
      f = testing::random_polynomial(prng, ring, 4, d, true);
      f = f.is_zero() ? f : f.homogeneous_part(f.degree());
    }
    const bool expected = testing::graded_member(f, ideal.generators());
    members += expected ? 1 : 0;
    v.require(contains(ideal, f) == expected, "membership trial " + std::to_string(trial));
  }
  v.note(std::to_string(corpus.size()) + " ideals x 20 permutations; " + std::to_string(syzygies_checked) +
         " contractions; 100 membership trials (" + std::to_string(members) + " members)");
  return v;
}

std::optional<std::string> run_report_all(const std::filesystem::path& out) {
  const std::string cmd = std::string(SYZFLIP_BINARY) + " report-all --corpus --out " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (!WIFEXITED(status) || WEXITSTATUS(status) > 1) return std::nullopt;
  std::ifstream in(out, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Verdict determinism() {
  Verdict v;
  const auto dir = std::filesystem::temp_directory_path() / "syzflip_acceptance";
  std::filesystem::create_directories(dir);
  const auto first = run_report_all(dir / "first.json");
  const auto second = run_report_all(dir / "second.json");
  v.require(first.has_value() && second.has_value(), "report-all did not produce a report");
  if (first && second) {
    v.require(!first->empty(), "empty report");
    v.require(*first == *second, "reports differ");
    v.note(std::to_string(first->size()) + " bytes, identical");
  }
  std::filesystem::remove_all(dir);
  return v;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace syzflip

int main() {
  using namespace syzflip;
  const std::vector<Criterion> criteria{
      {1, "K2 verdicts", k2_verdicts},
      {2, "N2 implies K2 on the corpus", n2_implies_k2},
      {3, "secant ideals", secant_ideals},
      {4, "deficiency formula", deficiency_formula},
      {5, "fiber dichotomy", fiber_dichotomy},
      {6, "line restriction ranks", line_restriction},
      {7, "cohomology engine sanity", cohomology_sanity},
      {8, "vanishing scans", vanishing_scans},
      {9, "flip arithmetic", flip_arithmetic},
      {10, "engine properties", engine_properties},
      {11, "report-all determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(start);
    failed += v.pass ? 0 : 1;
    std::ostringstream line;
    line << (v.pass ? "PASS" : "FAIL") << " [" << (c.id < 10 ? " " : "") << c.id << "] " << c.title << " ("
         << fmt_seconds(s) << ")";
    std::cout << line.str() << "\n";
    for (const auto& n : v.notes) std::cout << "       " << n << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
