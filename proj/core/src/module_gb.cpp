#include "syzflip/module_gb.hpp"

#include <algorithm>

#include "syzflip/error.hpp"

namespace syzflip {

ModuleOrder::ModuleOrder(MonomialOrder base, std::vector<int> shifts, std::size_t eliminated)
    : base_(base), shifts_(std::move(shifts)), eliminated_(eliminated) {
  if (shifts_.empty()) throw InvalidArgument("free module of rank zero");
  if (eliminated_ > shifts_.size()) throw InvalidArgument("eliminated block exceeds rank");
}

int ModuleOrder::cmp(const Monomial& a, std::uint32_t ca, const Monomial& b,
                     std::uint32_t cb) const noexcept {
  if (eliminated_ > 0) {
    const bool ga = ca >= eliminated_;
    const bool gb = cb >= eliminated_;
    if (ga != gb) return ga ? -1 : 1;
  }
  if (base_.is_degree_compatible()) {
    const int da = a.degree() + shifts_[ca];
    const int db = b.degree() + shifts_[cb];
    if (da != db) return da > db ? 1 : -1;
  }
  if (const int c = base_.cmp(a, b); c != 0) return c;
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

ModuleVector to_module_vector(std::span<const Polynomial> entries, const ModuleOrder& order) {
  if (entries.size() != order.rank()) throw InvalidArgument("vector length differs from rank");
  ModuleVector v;
  for (std::size_t c = 0; c < entries.size(); ++c) {
    for (const auto& t : entries[c].terms()) {
      v.push_back({t.mono, static_cast<std::uint32_t>(c), t.coeff});
    }
  }
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm& a, const ModuleTerm& b) { return order.cmp(a, b) > 0; });
  return v;
}

std::vector<Polynomial> from_module_vector(const ModuleVector& v, const RingPtr& ring,
                                           std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw InvalidArgument("module term outside the free module");
    parts[t.comp].push_back({t.mono, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

namespace {

// Returns a[start+1..] - coeff * mono * b[1..]; the two dropped leads cancel.
ModuleVector subtract_multiple(const ModuleVector& a, std::size_t start, const ModuleVector& b,
                               const Monomial& mono, const FieldElement& coeff,
                               const ModuleOrder& order) {
  ModuleVector out;
  out.reserve(a.size() - start + b.size());
  std::size_t i = start + 1;
  std::size_t j = 1;
  ModuleTerm bt;
  bool have_b = false;
  auto load_b = [&]() {
    if (j < b.size()) {
      bt.mono = b[j].mono * mono;
      bt.comp = b[j].comp;
      bt.coeff = -(b[j].coeff * coeff);
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() && have_b) {
    const int c = order.cmp(a[i], bt);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(bt);
      ++j;
      load_b();
    } else {
      FieldElement s = a[i].coeff + bt.coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, a[i].comp, std::move(s)});
      ++i;
      ++j;
      load_b();
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (have_b) {
    out.push_back(bt);
    ++j;
    load_b();
  }
  return out;
}

void make_monic(ModuleVector& v) {
  if (v.empty() || v.front().coeff.is_one()) return;
  const FieldElement inv = v.front().coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
}

}  // namespace

ModuleGroebner::ModuleGroebner(RingPtr ring, ModuleOrder order, GroebnerOptions options)
    : ring_(std::move(ring)), order_(std::move(order)), options_(options) {}

void ModuleGroebner::add(ModuleVector v) {
  if (v.empty()) return;
  for (const auto& t : v) {
    if (t.comp >= order_.rank()) throw InvalidArgument("generator outside the free module");
    if (t.mono.size() != ring_->nvars()) throw RingMismatch("generator from another ring");
  }
  pending_.push_back(std::move(v));
}

int ModuleGroebner::initial_sugar(const ModuleVector& v) const {
  int s = 0;
  for (const auto& t : v) s = std::max(s, order_.degree(t));
  return s;
}

const ModuleGroebner::Element* ModuleGroebner::find_reducer(const ModuleTerm& t,
                                                            std::size_t skip) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Element& e = basis_[k];
    if (e.redundant || k == skip) continue;
    const ModuleTerm& lead = e.vec.front();
    if (lead.comp == t.comp && lead.mono.divides(t.mono)) return &e;
  }
  return nullptr;
}

ModuleVector ModuleGroebner::reduce(ModuleVector v, int& sugar, bool full,
                                    std::size_t skip) const {
  ModuleVector done;
  std::size_t pos = 0;
  while (pos < v.size()) {
    const ModuleTerm& t = v[pos];
    const Element* r = find_reducer(t, skip);
    if (r == nullptr) {
      if (!full) break;
      done.push_back(t);
      ++pos;
      continue;
    }
    // Reducers are monic, so the multiplier is the term's own coefficient.
    const Monomial m = t.mono / r->vec.front().mono;
    sugar = std::max(sugar, r->sugar + m.degree());
    v = subtract_multiple(v, pos, r->vec, m, t.coeff, order_);
    pos = 0;
  }
  if (!full) {
    done.insert(done.end(), v.begin() + static_cast<std::ptrdiff_t>(pos), v.end());
  }
  return done;
}

ModuleVector ModuleGroebner::spoly(const Pair& p, int& sugar) const {
  const ModuleVector& a = basis_[p.i].vec;
  const ModuleVector& b = basis_[p.j].vec;
  const Monomial ma = p.lcm / a.front().mono;
  const Monomial mb = p.lcm / b.front().mono;
  ModuleVector sa;
  sa.reserve(a.size());
  for (const auto& t : a) sa.push_back({t.mono * ma, t.comp, t.coeff});
  sugar = p.sugar;
  // Both leads are monic and equal after shifting, so subtracting cancels them.
  return subtract_multiple(sa, 0, b, mb, FieldElement::one(ring_->field()), order_);
}

void ModuleGroebner::insert(ModuleVector v, int sugar) {
  make_monic(v);
  const std::size_t h = basis_.size();
  basis_.push_back({std::move(v), sugar, false});
  const ModuleTerm& lh = basis_[h].vec.front();
  const bool ideal_case = order_.rank() == 1;

  struct Candidate {
    Pair pair;
    bool coprime;
  };
  std::vector<Candidate> fresh;
  for (std::size_t g = 0; g < h; ++g) {
    if (basis_[g].redundant) continue;
    const ModuleTerm& lg = basis_[g].vec.front();
    if (lg.comp != lh.comp) continue;
    Monomial l = Monomial::lcm(lg.mono, lh.mono);
    const int s = std::max(basis_[g].sugar + (l.degree() - lg.mono.degree()),
                           sugar + (l.degree() - lh.mono.degree()));
    fresh.push_back({{g, h, std::move(l), lh.comp, s}, ideal_case && lg.mono.coprime(lh.mono)});
  }

  // Chain criterion on the new pairs; an lcm class containing a coprime pair is dropped.
  std::vector<Candidate> kept;
  for (std::size_t k = 0; k < fresh.size(); ++k) {
    const Candidate& c = fresh[k];
    bool dominated = false;
    if (!c.coprime) {
      for (std::size_t q = k + 1; q < fresh.size() && !dominated; ++q) {
        dominated = fresh[q].pair.lcm.divides(c.pair.lcm);
      }
      for (std::size_t q = 0; q < kept.size() && !dominated; ++q) {
        dominated = kept[q].pair.lcm.divides(c.pair.lcm);
      }
    }
    if (!dominated) kept.push_back(c);
  }

  // Old pairs made redundant by the new leading term.
  std::vector<Pair> survivors;
  survivors.reserve(pairs_.size());
  for (auto& p : pairs_) {
    if (p.comp == lh.comp && lh.mono.divides(p.lcm)) {
      const Monomial li = Monomial::lcm(basis_[p.i].vec.front().mono, lh.mono);
      const Monomial lj = Monomial::lcm(basis_[p.j].vec.front().mono, lh.mono);
      if (!(li == p.lcm) && !(lj == p.lcm)) continue;
    }
    survivors.push_back(std::move(p));
  }
  pairs_ = std::move(survivors);
  for (auto& c : kept) {
    if (!c.coprime) pairs_.push_back(std::move(c.pair));
  }

  for (std::size_t g = 0; g < h; ++g) {
    if (basis_[g].redundant) continue;
    const ModuleTerm& lg = basis_[g].vec.front();
    if (lg.comp == lh.comp && lh.mono.divides(lg.mono)) basis_[g].redundant = true;
  }
}

void ModuleGroebner::run() {
  std::stable_sort(pending_.begin(), pending_.end(),
                   [&](const ModuleVector& a, const ModuleVector& b) {
                     return initial_sugar(a) < initial_sugar(b);
                   });
  std::size_t next_pending = 0;
  while (next_pending < pending_.size() || !pairs_.empty()) {
    std::size_t best = pairs_.size();
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best == pairs_.size()) {
        best = k;
        continue;
      }
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      const int c = order_.cmp(a.lcm, a.comp, b.lcm, b.comp);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = k;
    }

    ModuleVector v;
    int sugar = 0;
    const bool take_pending =
        next_pending < pending_.size() &&
        (best == pairs_.size() || initial_sugar(pending_[next_pending]) <= pairs_[best].sugar);
    if (take_pending) {
      v = std::move(pending_[next_pending++]);
      sugar = initial_sugar(v);
    } else {
      Pair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (p.sugar > options_.degree_cap) throw DegreeCapExceeded(p.sugar, options_.degree_cap);
      v = spoly(p, sugar);
    }
    v = reduce(std::move(v), sugar, true, basis_.size());
    if (!v.empty()) insert(std::move(v), sugar);
  }
  pending_.clear();
}

ModuleVector ModuleGroebner::normal_form(ModuleVector v) const {
  int sugar = 0;
  return reduce(std::move(v), sugar, true, basis_.size());
}

std::vector<ModuleVector> ModuleGroebner::reduced_basis() const {
  if (!pending_.empty()) throw InvalidArgument("reduced_basis() before run()");
  std::vector<ModuleVector> out;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (basis_[k].redundant) continue;
    int sugar = 0;
    ModuleVector v = basis_[k].vec;
    // The lead is irreducible by the other minimal elements; only the tail changes.
    ModuleVector tail(v.begin() + 1, v.end());
    tail = reduce(std::move(tail), sugar, true, k);
    tail.insert(tail.begin(), v.front());
    out.push_back(std::move(tail));
  }
  std::sort(out.begin(), out.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return order_.cmp(a.front(), b.front()) < 0;
  });
  return out;
}

}  // namespace syzflip
