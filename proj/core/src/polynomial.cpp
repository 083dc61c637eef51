#include "syzflip/polynomial.hpp"

#include <algorithm>
#include <map>

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

// Merges two descending term lists into `out`, adding `scale * b` to `a`.
void merge_add(const std::vector<Term>& a, const std::vector<Term>& b,
               const MonomialOrder& order, std::vector<Term>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = order.cmp(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      FieldElement s = a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  for (const auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) {
      throw RingMismatch("term has " + std::to_string(t.mono.size()) +
                         " variables, ring has " + std::to_string(ring_->nvars()));
    }
    if (!(t.coeff.field() == ring_->field())) throw RingMismatch("coefficient field mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.cmp(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), one, c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  FieldElement v(ring->field(), c);
  return constant(std::move(ring), v);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const auto m = Monomial::variable(ring->nvars(), index);
  FieldElement one = FieldElement::one(ring->field());
  return monomial(std::move(ring), m, one);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::pair<Monomial, FieldElement> Polynomial::leading_data() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return {terms_.front().mono, terms_.front().coeff};
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front().mono;
}

const FieldElement& Polynomial::leading_coeff() const {
  if (terms_.empty()) throw InvalidArgument("leading term of the zero polynomial");
  return terms_.front().coeff;
}

int Polynomial::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_)) throw RingMismatch("polynomials from different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  std::vector<Term> out;
  merge_add(terms_, other.terms_, ring_->order(), out);
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial acc(a.ring_);
  if (a.is_zero() || b.is_zero()) return acc;
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  std::vector<Term> out;
  for (const auto& t : small.terms_) {
    // Multiplying by a monomial preserves the order, so each product row is sorted.
    std::vector<Term> row;
    row.reserve(large.size());
    for (const auto& u : large.terms_) row.push_back({t.mono * u.mono, t.coeff * u.coeff});
    merge_add(acc.terms_, row, a.ring_->order(), out);
    acc.terms_.swap(out);
  }
  return acc;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
  return scaled(terms_.front().coeff.inverse());
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != ring_->nvars()) {
    throw InvalidArgument("evaluation point has wrong length");
  }
  FieldElement sum = FieldElement::zero(ring_->field());
  for (const auto& t : terms_) {
    FieldElement v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) {
    throw InvalidArgument("substitution needs one image per variable");
  }
  if (images.empty()) throw InvalidArgument("substitution into an empty ring");
  const RingPtr& target = images.front().ring();
  for (const auto& im : images) {
    if (!same_ring(im.ring(), target)) throw RingMismatch("substitution images disagree on ring");
  }
  if (!(target->field() == ring_->field())) throw RingMismatch("substitution changes field");
  // Cache powers of each image as they are requested.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.mono[i] > 0) prod *= power(i, t.mono[i]);
    }
    result += prod;
  }
  return result;
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (target->names() != ring_->names() || !(target->field() == ring_->field())) {
    throw RingMismatch("in_ring requires identical variables and field");
  }
  if (same_ring(target, ring_)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  return Polynomial(target, terms_);
}

Polynomial Polynomial::homogeneous_part(int degree) const {
  Polynomial r(ring_);
  for (const auto& t : terms_) {
    if (t.mono.degree() == degree) r.terms_.push_back(t);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const mpq_class q = t.coeff.to_rational();
    const bool negative = sgn(q) < 0;
    const mpq_class mag = abs(q);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch("polynomials from different rings");
  const auto& [lm, lc] = g.leading_data();
  Polynomial quotient(f.ring());
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const auto& lead = rest.terms().front();
    if (!lm.divides(lead.mono)) throw InvalidArgument("polynomial division is not exact");
    const Monomial m = lead.mono / lm;
    const FieldElement c = lead.coeff / lc;
    quotient += Polynomial::monomial(f.ring(), m, c);
    rest -= g.mul_term(m, c);
  }
  return quotient;
}

}  // namespace syzflip
