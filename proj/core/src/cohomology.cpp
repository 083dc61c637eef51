#include "syzflip/cohomology.hpp"

#include <unordered_map>

#include "syzflip/error.hpp"
#include "syzflip/linalg.hpp"

namespace syzflip {

GradedModule::GradedModule(RingPtr ring, Kind kind, HilbertData hilbert)
    : ring_(std::move(ring)), kind_(kind), hilbert_(std::move(hilbert)) {}

GradedModule GradedModule::quotient(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("cohomology needs a homogeneous ideal");
  GradedModule m(ideal.ring(), Kind::Quotient, hilbert_data(ideal, options));
  Resolution res = free_resolution(ideal, static_cast<int>(ideal.nvars()), options);
  m.shifts_.push_back({0});
  for (auto& map : res.maps) {
    m.shifts_.push_back(map.source_shifts);
    m.maps_.push_back(std::move(map));
  }
  return m;
}

GradedModule GradedModule::ideal(const Ideal& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("cohomology needs a homogeneous ideal");
  GradedModule m(ideal.ring(), Kind::Ideal, hilbert_data(ideal, options));
  Resolution res = free_resolution(ideal, static_cast<int>(ideal.nvars()), options);
  for (std::size_t i = 0; i < res.maps.size(); ++i) {
    m.shifts_.push_back(res.maps[i].source_shifts);
    if (i > 0) m.maps_.push_back(std::move(res.maps[i]));
  }
  return m;
}

mpz_class GradedModule::hilbert_function(long k) const {
  const mpz_class quotient = hilbert_.hilbert_function(k);
  if (kind_ == Kind::Quotient) return quotient;
  const long n = static_cast<long>(ring_->nvars()) - 1;
  return binomial(k + n, n) - quotient;
}

mpz_class GradedModule::hilbert_polynomial(long k) const {
  const mpz_class quotient = hilbert_.hilbert_polynomial(k);
  if (kind_ == Kind::Quotient) return quotient;
  const long n = static_cast<long>(ring_->nvars()) - 1;
  return binomial_polynomial(k + n, n) - quotient;
}

// dim Hom(F_i, S)_degree = sum over twists a of dim S_{degree + a}.
long GradedModule::dual_dimension(int i, long degree) const {
  if (i < 0 || i >= static_cast<int>(shifts_.size())) return 0;
  const long n = static_cast<long>(ring_->nvars()) - 1;
  long total = 0;
  for (int a : shifts_[i]) total += binomial(degree + a + n, n).get_si();
  return total;
}

// Rank of Hom(F_i, S)_degree -> Hom(F_{i+1}, S)_degree, phi -> phi o d_{i+1}.
long GradedModule::dual_rank(int i, long degree) const {
  if (i < 0 || i >= static_cast<int>(maps_.size())) return 0;
  const auto key = std::make_pair(i, degree);
  if (const auto it = rank_cache_.find(key); it != rank_cache_.end()) return it->second;

  const GradedMap& map = maps_[i];
  const std::size_t nvars = ring_->nvars();
  // Row basis: pairs (l, monomial of degree degree + b_l) for F_{i+1}.
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> rows(map.source_shifts.size());
  std::size_t row_count = 0;
  for (std::size_t l = 0; l < map.source_shifts.size(); ++l) {
    for (const auto& m : monomials_of_degree(nvars, static_cast<int>(degree + map.source_shifts[l]))) {
      rows[l].emplace(m, row_count++);
    }
  }
  std::vector<std::pair<std::size_t, Monomial>> cols;
  for (std::size_t c = 0; c < map.target_shifts.size(); ++c) {
    for (const auto& m : monomials_of_degree(nvars, static_cast<int>(degree + map.target_shifts[c]))) {
      cols.emplace_back(c, m);
    }
  }
  long result = 0;
  if (row_count > 0 && !cols.empty()) {
    Matrix a(ring_->field(), row_count, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto& [c, m] = cols[j];
      for (std::size_t l = 0; l < map.columns.size(); ++l) {
        for (const auto& t : map.columns[l][c].terms()) {
          a(rows[l].at(t.mono * m), j) += t.coeff;
        }
      }
    }
    result = static_cast<long>(rank(std::move(a)));
  }
  rank_cache_.emplace(key, result);
  return result;
}

long GradedModule::ext_dimension(int i, long degree) const {
  if (i < 0) return 0;
  return dual_dimension(i, degree) - dual_rank(i, degree) - dual_rank(i - 1, degree);
}

long GradedModule::local_cohomology(int j, long k) const {
  const long big_n = static_cast<long>(ring_->nvars());
  return ext_dimension(static_cast<int>(big_n - j), -k - big_n);
}

std::vector<long> GradedModule::sheaf_cohomology(long k) const {
  const int n = static_cast<int>(ring_->nvars()) - 1;
  std::vector<long> h(static_cast<std::size_t>(n) + 1, 0);
  h[0] = hilbert_function(k).get_si() - local_cohomology(0, k) + local_cohomology(1, k);
  for (int i = 1; i <= n; ++i) h[static_cast<std::size_t>(i)] = local_cohomology(i + 1, k);
  return h;
}

Ideal ideal_power_saturated(const Ideal& ideal, int a, const GroebnerOptions& options) {
  if (a < 1) throw InvalidArgument("ideal power exponent must be at least 1");
  if (!ideal.is_homogeneous()) throw InvalidArgument("ideal power of an inhomogeneous ideal");
  const Ideal p = power(ideal, static_cast<unsigned>(a));
  return minimalize(saturate(p, Ideal::irrelevant(ideal.ring()), options), options);
}

long CohomologyTable::at(int i, int a, long k) const {
  const auto it = cells.find({a, k});
  if (it == cells.end()) throw InvalidArgument("cohomology table has no such cell");
  return it->second.h.at(static_cast<std::size_t>(i));
}

std::uint64_t ideal_hash(const Ideal& ideal) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& name : ideal.ring()->names()) feed(name + " ");
  feed(ideal.to_string());
  return h;
}

CohomologyCell cohomology_cell(const GradedModule& module, int a, long k) {
  CohomologyCell cell;
  cell.a = a;
  cell.k = k;
  cell.h = module.sheaf_cohomology(k);
  cell.hilbert_polynomial = module.hilbert_polynomial(k);
  cell.ideal_dimension = module.hilbert_function(k);
  mpz_class euler = 0;
  for (std::size_t i = 0; i < cell.h.size(); ++i) {
    euler += i % 2 == 0 ? cell.h[i] : -cell.h[i];
  }
  cell.euler_consistent = euler == cell.hilbert_polynomial;
  cell.h0_consistent = cell.ideal_dimension == cell.h[0];
  return cell;
}

VanishingScan vanishing_scan(const Ideal& ideal, int d, std::span<const int> a_values, long window,
                             VanishingVariant variant, const GroebnerOptions& options) {
  if (window < 0) throw InvalidArgument("negative scan window");
  if (!ideal.is_homogeneous()) throw InvalidArgument("vanishing scan needs a homogeneous ideal");
  VanishingScan scan;
  scan.variant = variant;
  scan.d = d;
  scan.n = static_cast<int>(ideal.nvars()) - 1;
  const HilbertData h = hilbert_data(ideal, options);
  if (h.dimension < 0) throw InvalidArgument("vanishing scan of an empty scheme");
  scan.r = h.dimension;
  scan.e = scan.n - scan.r;
  scan.table.n = scan.n;
  scan.table.ideal_hash = ideal_hash(ideal);

  for (int a : a_values) {
    const GradedModule module = GradedModule::ideal(ideal_power_saturated(ideal, a, options), options);
    long lo = 0;
    long hi = 0;
    if (variant == VanishingVariant::Little) {
      lo = static_cast<long>(d) * (scan.e + a - 1) - (scan.n + 1);
      hi = lo + window;
      scan.hypothesis[a] = true;
    } else {
      lo = hi = 2L * a - 1;
      scan.hypothesis[a] = a > scan.n - 3 * scan.r - 1;
    }
    scan.bounds[a] = lo;
    if (variant == VanishingVariant::Little) scan.below_bound.push_back(cohomology_cell(module, a, lo - 1));
    for (long k = lo; k <= hi; ++k) {
      CohomologyCell cell = cohomology_cell(module, a, k);
      if (!cell.euler_consistent || !cell.h0_consistent) scan.inconsistent.emplace_back(a, k);
      if (scan.hypothesis[a]) {
        for (std::size_t i = 1; i < cell.h.size(); ++i) {
          if (cell.h[i] != 0) scan.violations.push_back({a, k, static_cast<int>(i), cell.h[i]});
        }
      }
      scan.table.cells.emplace(std::make_pair(a, k), std::move(cell));
    }
  }
  return scan;
}

}  // namespace syzflip
