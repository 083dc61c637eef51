#include "syzflip/syzygy.hpp"

#include <algorithm>
#include <sstream>

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

void append(ModuleVector& v, const Polynomial& f, std::uint32_t comp) {
  for (const auto& t : f.terms()) v.push_back({t.mono, comp, t.coeff});
}

void sort_vector(ModuleVector& v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.cmp(a, b) > 0; });
}

ModuleVector pack(std::span<const Polynomial> entries, std::uint32_t offset,
                  const ModuleOrder& order) {
  ModuleVector v;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    append(v, entries[i], offset + static_cast<std::uint32_t>(i));
  }
  sort_vector(v, order);
  return v;
}

// Entries of the components [offset, offset + count) of v.
std::vector<Polynomial> unpack(const ModuleVector& v, const RingPtr& ring, std::uint32_t offset,
                               std::size_t count) {
  std::vector<std::vector<Term>> parts(count);
  for (const auto& t : v) {
    if (t.comp < offset || t.comp >= offset + count) continue;
    parts[t.comp - offset].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

void check_shape(const GradedMap& map) {
  for (const auto& c : map.columns) {
    if (c.size() != map.target_shifts.size()) throw InvalidArgument("map column has wrong length");
  }
  if (map.columns.size() != map.source_shifts.size()) {
    throw InvalidArgument("map has a column count different from its source rank");
  }
}

}  // namespace

bool SyzygyElement::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Polynomial& p) { return p.is_zero(); });
}

std::string SyzygyElement::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ", ";
    out += entries[i].to_string();
  }
  return out + "]";
}

SyzygyElement make_element(std::vector<Polynomial> entries, std::vector<int> shifts) {
  if (entries.size() != shifts.size()) throw InvalidArgument("entry and shift counts differ");
  SyzygyElement s{std::move(entries), std::move(shifts), 0};
  bool first = true;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    if (e.is_zero()) continue;
    if (!e.is_homogeneous()) throw InvalidArgument("module element with inhomogeneous entry");
    const int d = e.degree() + s.shifts[i];
    if (first) {
      s.degree = d;
      first = false;
    } else if (d != s.degree) {
      throw InvalidArgument("module element with inconsistent twists");
    }
  }
  return s;
}

Polynomial contract(const SyzygyElement& s, std::span<const Polynomial> generators) {
  if (s.entries.size() != generators.size()) throw InvalidArgument("contraction shape mismatch");
  if (generators.empty()) throw InvalidArgument("contraction against no generators");
  Polynomial sum(generators.front().ring());
  for (std::size_t i = 0; i < generators.size(); ++i) sum += s.entries[i] * generators[i];
  return sum;
}

long BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

long BettiTable::total(int i) const {
  long sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) sum += value;
  }
  return sum;
}

int BettiTable::length() const {
  int best = -1;
  for (const auto& [key, value] : entries_) best = std::max(best, key.first);
  return best;
}

std::string BettiTable::to_string() const {
  if (entries_.empty()) return "(empty)\n";
  int lo = entries_.begin()->first.second - entries_.begin()->first.first;
  int hi = lo;
  for (const auto& [key, value] : entries_) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::ostringstream out;
  out << "     ";
  for (int i = 0; i <= length(); ++i) out << ' ' << std::string(4 - std::to_string(i).size(), ' ') << i;
  out << '\n';
  for (int row = lo; row <= hi; ++row) {
    const std::string label = std::to_string(row) + ":";
    out << std::string(5 - std::min<std::size_t>(5, label.size()), ' ') << label;
    for (int i = 0; i <= length(); ++i) {
      const long b = at(i, i + row);
      const std::string cell = b == 0 ? "." : std::to_string(b);
      out << ' ' << std::string(4 - std::min<std::size_t>(4, cell.size()), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<SyzygyElement> minimal_generators(const RingPtr& ring, const std::vector<int>& shifts,
                                              std::vector<SyzygyElement> vectors,
                                              const GroebnerOptions& options) {
  std::stable_sort(vectors.begin(), vectors.end(),
                   [](const SyzygyElement& a, const SyzygyElement& b) { return a.degree < b.degree; });
  const ModuleOrder order(ring->order(), shifts);
  ModuleGroebner engine(ring, order, options);
  std::vector<SyzygyElement> kept;
  for (auto& v : vectors) {
    if (v.is_zero()) continue;
    ModuleVector packed = pack(v.entries, 0, order);
    if (!kept.empty() && engine.reduces_to_zero(packed)) continue;
    engine.add(std::move(packed));
    engine.run();
    kept.push_back(std::move(v));
  }
  return kept;
}

std::vector<SyzygyElement> kernel(const RingPtr& ring, const GradedMap& map,
                                  const GroebnerOptions& options) {
  check_shape(map);
  const std::size_t g = map.target_shifts.size();
  const std::size_t f = map.source_shifts.size();
  if (f == 0) return {};
  // Module S^g ⊕ S^f with the target block eliminated: the basis elements
  // supported on the source block generate the kernel.
  std::vector<int> shifts = map.target_shifts;
  shifts.insert(shifts.end(), map.source_shifts.begin(), map.source_shifts.end());
  const ModuleOrder order(ring->order(), shifts, g);
  ModuleGroebner engine(ring, order, options);
  const FieldElement one = FieldElement::one(ring->field());
  for (std::size_t i = 0; i < f; ++i) {
    ModuleVector v = pack(map.columns[i], 0, order);
    v.push_back({Monomial(ring->nvars()), static_cast<std::uint32_t>(g + i), one});
    sort_vector(v, order);
    engine.add(std::move(v));
  }
  engine.run();
  std::vector<SyzygyElement> raw;
  for (const auto& v : engine.reduced_basis()) {
    if (v.front().comp < g) continue;
    raw.push_back(make_element(unpack(v, ring, static_cast<std::uint32_t>(g), f), map.source_shifts));
  }
  return minimal_generators(ring, map.source_shifts, std::move(raw), options);
}

std::vector<SyzygyElement> syzygies(std::span<const Polynomial> generators,
                                    const GroebnerOptions& options) {
  if (generators.empty()) return {};
  const RingPtr& ring = generators.front().ring();
  GradedMap map;
  map.target_shifts = {0};
  for (const auto& f : generators) {
    if (!same_ring(f.ring(), ring)) throw RingMismatch("syzygies across rings");
    if (!f.is_homogeneous()) throw InvalidArgument("syzygies need homogeneous forms");
    map.source_shifts.push_back(std::max(0, f.degree()));
    map.columns.push_back({f});
  }
  return kernel(ring, map, options);
}

Resolution free_resolution(const Ideal& ideal, int max_length, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw InvalidArgument("free resolution needs a homogeneous ideal");
  if (max_length < 0) throw InvalidArgument("negative resolution length");
  Resolution res{ideal.ring(), {}, {}};
  const Ideal gens = minimalize(ideal, options);
  if (gens.is_zero()) return res;

  GradedMap first;
  first.target_shifts = {0};
  for (const auto& f : gens.generators()) {
    first.source_shifts.push_back(f.degree());
    first.columns.push_back({f});
    res.betti.add(0, f.degree());
  }
  res.maps.push_back(std::move(first));
  for (int i = 1; i <= max_length; ++i) {
    const GradedMap& previous = res.maps.back();
    auto ker = kernel(ideal.ring(), previous, options);
    if (ker.empty()) break;
    GradedMap next;
    next.target_shifts = previous.source_shifts;
    for (auto& s : ker) {
      next.source_shifts.push_back(s.degree);
      res.betti.add(i, s.degree);
      next.columns.push_back(std::move(s.entries));
    }
    res.maps.push_back(std::move(next));
  }
  return res;
}

namespace {

ModuleOrder membership_order(const RingPtr& ring, const std::vector<int>& shifts,
                             const std::vector<SyzygyElement>& gens) {
  std::vector<int> all = shifts;
  for (const auto& g : gens) all.push_back(g.degree);
  return ModuleOrder(ring->order(), std::move(all), shifts.size());
}

}  // namespace

SubmoduleMembership::SubmoduleMembership(RingPtr ring, std::vector<int> shifts,
                                         std::vector<SyzygyElement> gens,
                                         const GroebnerOptions& options)
    : ring_(std::move(ring)),
      shifts_(std::move(shifts)),
      count_(gens.size()),
      engine_(ring_, membership_order(ring_, shifts_, gens), options) {
  const std::size_t rank = shifts_.size();
  if (rank == 0) throw InvalidArgument("membership in a rank-zero module");
  for (const auto& g : gens) {
    if (g.entries.size() != rank || g.shifts != shifts_) {
      throw InvalidArgument("module membership shape mismatch");
    }
  }
  // (g_i, e_i) satisfies u = sum w_i g_i, and so does everything derived from it.
  const ModuleOrder& order = engine_.order();
  const FieldElement one = FieldElement::one(ring_->field());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ModuleVector packed = pack(gens[i].entries, 0, order);
    packed.push_back({Monomial(ring_->nvars()), static_cast<std::uint32_t>(rank + i), one});
    sort_vector(packed, order);
    engine_.add(std::move(packed));
  }
  engine_.run();
}

ModuleMembership SubmoduleMembership::test(const SyzygyElement& v) const {
  const std::size_t rank = shifts_.size();
  if (v.entries.size() != rank || v.shifts != shifts_) {
    throw InvalidArgument("module membership shape mismatch");
  }
  ModuleMembership result;
  if (v.is_zero()) {
    result.member = true;
    result.coefficients.assign(count_, Polynomial(ring_));
    return result;
  }
  const ModuleVector nf = engine_.normal_form(pack(v.entries, 0, engine_.order()));
  result.member = nf.empty() || nf.front().comp >= rank;
  if (result.member) {
    for (auto& c : unpack(nf, ring_, static_cast<std::uint32_t>(rank), count_)) {
      result.coefficients.push_back(-c);
    }
  } else {
    result.witness = unpack(nf, ring_, 0, rank);
  }
  return result;
}

ModuleMembership module_member(const SyzygyElement& v, std::span<const SyzygyElement> gens,
                               const GroebnerOptions& options) {
  if (v.entries.empty()) throw InvalidArgument("membership in a rank-zero module");
  const SubmoduleMembership engine(v.entries.front().ring(), v.shifts,
                                   std::vector<SyzygyElement>(gens.begin(), gens.end()), options);
  return engine.test(v);
}

}  // namespace syzflip
