#include "syzflip/flipcalc.hpp"

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
  Polynomial rest = num;
  Polynomial quotient(num.ring());
  const Monomial& lead = den.leading_monomial();
  const FieldElement& lead_coeff = den.leading_coeff();
  while (!rest.is_zero()) {
    const Monomial& m = rest.leading_monomial();
    if (!lead.divides(m)) return std::nullopt;
    const Monomial shift = m / lead;
    const FieldElement c = rest.leading_coeff() / lead_coeff;
    quotient += Polynomial::monomial(num.ring(), shift, c);
    rest -= den.mul_term(shift, c);
  }
  return quotient;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

// Juxtaposed monomials with explicit signs and no spaces, e.g. `2k+n-1`.
std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  static const char* names[] = {"n", "r", "k"};
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coeff.rational();
    const bool negative = c < 0;
    if (negative) c = -c;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string vars;
    for (std::size_t i = 0; i < 3; ++i) {
      const int e = t.mono[i];
      if (e == 0) continue;
      vars += names[i];
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out += format_rational(c);
    } else {
      if (c != 1) out += format_rational(c);
      out += vars;
    }
  }
  return out;
}

std::string to_display(std::string ascii) {
  std::string out;
  for (char ch : ascii) {
    if (ch == '-') {
      out += "−";
    } else {
      out += ch;
    }
  }
  return out;
}

FieldElement rational(const mpq_class& q) { return FieldElement(Field::rationals(), q); }

std::size_t coefficient_count(Space space) { return space == Space::M2tilde ? 3 : 2; }

void check_same_space(const DivisorClass& a, const DivisorClass& b) {
  if (a.space() != b.space()) {
    throw InvalidArgument("space_mismatch", "classes on " + to_string(a.space()) + " and " +
                                                to_string(b.space()));
  }
}

}  // namespace

const RingPtr& Scalar::ring() {
  static const RingPtr symbols = Ring::make({"n", "r", "k"});
  return symbols;
}

Scalar::Scalar() : num_(ring()), den_(Polynomial::constant(ring(), 1)) {}

Scalar::Scalar(long value) : num_(Polynomial::constant(ring(), value)), den_(Polynomial::constant(ring(), 1)) {}

Scalar::Scalar(const mpq_class& value)
    : num_(Polynomial::constant(ring(), rational(value))), den_(Polynomial::constant(ring(), 1)) {}

Scalar::Scalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_ring(num_.ring(), ring()) || !same_ring(den_.ring(), ring())) {
    throw RingMismatch("scalars live in Q[n, r, k]");
  }
  normalize();
}

Scalar Scalar::symbol(Symbol s) {
  return Scalar(Polynomial::variable(ring(), static_cast<std::size_t>(s)), Polynomial::constant(ring(), 1));
}

void Scalar::normalize() {
  if (den_.is_zero()) throw InvalidArgument("division_by_zero", "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(ring(), 1);
    return;
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(den_.leading_coeff().inverse());
    den_ = Polynomial::constant(ring(), 1);
    return;
  }
  if (auto q = divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = Polynomial::constant(ring(), 1);
    return;
  }
  if (!num_.is_constant()) {
    if (auto q = divide_exact(den_, num_)) {
      den_ = std::move(*q);
      num_ = Polynomial::constant(ring(), 1);
      if (den_.is_constant()) {
        normalize();
        return;
      }
    }
  }
  const FieldElement c = den_.leading_coeff().inverse();
  num_ = num_.scaled(c);
  den_ = den_.scaled(c);
}

bool Scalar::is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

std::optional<mpq_class> Scalar::value() const {
  if (!is_constant()) return std::nullopt;
  if (num_.is_zero()) return mpq_class(0);
  return num_.leading_coeff().rational();
}

bool Scalar::is_affine() const noexcept { return den_.is_constant() && num_.degree() <= 1; }

mpq_class Scalar::evaluate(const mpq_class& n, const mpq_class& r, const mpq_class& k) const {
  const std::vector<FieldElement> point{rational(n), rational(r), rational(k)};
  const FieldElement d = den_.evaluate(point);
  if (d.is_zero()) throw InvalidArgument("pole", "denominator " + format_polynomial(den_) + " vanishes");
  return (num_.evaluate(point) / d).rational();
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) { return Scalar(a.num_ * b.num_, a.den_ * b.den_); }

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw InvalidArgument("division_by_zero", "division by the zero scalar");
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Scalar& a, const Scalar& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string Scalar::to_string() const {
  if (den_.is_constant()) return format_polynomial(num_);
  auto wrap = [](const Polynomial& p) {
    const std::string s = format_polynomial(p);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

std::string Scalar::display() const { return to_display(to_string()); }

std::string to_string(Space space) {
  switch (space) {
    case Space::BlownUpPn:
      return "blown_up_pn";
    case Space::M2tilde:
      return "m2tilde";
    case Space::M2:
      return "m2";
  }
  return "unknown";
}

DivisorClass::DivisorClass(Space space, std::vector<Scalar> coefficients)
    : space_(space), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != coefficient_count(space_)) {
    throw InvalidArgument("coefficient_count", syzflip::to_string(space_) + " classes have " +
                                                   std::to_string(coefficient_count(space_)) +
                                                   " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

DivisorClass DivisorClass::zero(Space space) {
  return DivisorClass(space, std::vector<Scalar>(coefficient_count(space)));
}

DivisorClass DivisorClass::evaluate(const mpq_class& n, const mpq_class& r, const mpq_class& k) const {
  std::vector<Scalar> out;
  for (const auto& c : coeffs_) out.emplace_back(c.evaluate(n, r, k));
  return DivisorClass(space_, std::move(out));
}

bool DivisorClass::proportional_to(const DivisorClass& other) const {
  if (space_ != other.space_) return false;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (other.coeffs_[j].is_zero()) continue;
    return *this == scale(other, coeffs_[j] / other.coeffs_[j]);
  }
  return *this == other;
}

std::string DivisorClass::to_string() const {
  std::string out = "O(";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ", ";
    out += coeffs_[i].to_string();
  }
  return out + ")";
}

std::string DivisorClass::display() const { return to_display(to_string()); }

std::string DivisorClass::notation() const {
  static const std::vector<std::string> pn{"H", "E"};
  static const std::vector<std::string> tilde{"H", "E₁", "E₂"};
  const auto& basis = space_ == Space::M2tilde ? tilde : pn;
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string term;
    if (c == Scalar(1)) {
      term = basis[i];
    } else if (c == Scalar(-1)) {
      term = "-" + basis[i];
    } else if (const std::string text = c.to_string(); text.find_first_of("+-/", 1) == std::string::npos) {
      term = text + basis[i];
    } else {
      term = "(" + c.to_string() + ")" + basis[i];
    }
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return to_display(out.empty() ? "0" : out);
}

std::string DivisorClass::sheaf() const {
  std::string subscript;
  switch (space_) {
    case Space::BlownUpPn:
      subscript = "P̃ⁿ";
      break;
    case Space::M2tilde:
      subscript = "M̃₂";
      break;
    case Space::M2:
      subscript = "M₂";
      break;
  }
  return "O_{" + subscript + "}(" + notation() + ")";
}

bool operator==(const DivisorClass& a, const DivisorClass& b) {
  return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  check_same_space(a, b);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < a.coefficients().size(); ++i) out.push_back(a[i] + b[i]);
  return DivisorClass(a.space(), std::move(out));
}

DivisorClass subtract(const DivisorClass& a, const DivisorClass& b) { return add(a, scale(b, -1)); }

DivisorClass scale(const DivisorClass& a, const Scalar& q) {
  std::vector<Scalar> out;
  for (const auto& c : a.coefficients()) out.push_back(c * q);
  return DivisorClass(a.space(), std::move(out));
}

DivisorClass canonical_class(Space space, const Scalar& n, const Scalar& r) {
  switch (space) {
    case Space::BlownUpPn:
      return DivisorClass(space, {-n - 1, n - r - 1});
    case Space::M2tilde:
      return DivisorClass(space, {-n - 1, n - r - 1, n - 2 * r - 2});
    case Space::M2:
      break;
  }
  throw InvalidArgument("invalid_space", "no canonical class formula on " + to_string(space));
}

bool codimension_assumption(const Scalar& n, const Scalar& r) {
  const auto nv = n.value();
  const auto rv = r.value();
  if (!nv || !rv) return true;
  return *nv - 2 * *rv - 1 >= 2;
}

DivisorClass lk_class(const Scalar& k) { return DivisorClass(Space::M2tilde, {2 * k - 1, -k, -1}); }

DivisorClass kv_base(const Scalar& k) { return DivisorClass(Space::M2tilde, {2 * k - 1, -k, -2}); }

KvRewrite kv_rewrite(const DivisorClass& base, const Scalar& n, const Scalar& r, const Scalar& k) {
  const Scalar m = n - 2 * r;
  if (m.is_zero()) throw InvalidArgument("degenerate", "the rewrite needs n != 2r");
  const Scalar alpha = (k + n - r - 1) / m;
  DivisorClass lhs = base - canonical_class(Space::M2tilde, n, r);
  DivisorClass rhs = scale(lk_class(alpha), m) + DivisorClass(Space::M2tilde, {2, 0, 0});
  const bool holds = lhs == rhs;
  return KvRewrite{alpha, std::move(lhs), std::move(rhs), holds};
}

bool verify_kv_rewrite() { return verify_kv_rewrite(kv_base()); }

bool verify_kv_rewrite(const DivisorClass& base) { return kv_rewrite(base).holds; }

DivisorClass pullback_h(const DivisorClass& c) {
  if (c.space() != Space::M2) {
    throw InvalidArgument("space_mismatch", "pullback_h takes a class on m2, got " + to_string(c.space()));
  }
  return DivisorClass(Space::M2tilde, {c[0], c[1], c[0] + 2 * c[1]});
}

std::string pullback_statement(const DivisorClass& c) {
  return "h*" + c.sheaf() + " = " + pullback_h(c).sheaf();
}

std::string to_string(ThresholdVariant variant) {
  switch (variant) {
    case ThresholdVariant::Little:
      return "little";
    case ThresholdVariant::Veronese:
      return "veronese";
    case ThresholdVariant::Second:
      return "second";
  }
  return "unknown";
}

ThresholdVariant parse_threshold_variant(const std::string& name) {
  if (name == "little") return ThresholdVariant::Little;
  if (name == "veronese") return ThresholdVariant::Veronese;
  if (name == "second") return ThresholdVariant::Second;
  throw InvalidArgument("unknown_variant", "unknown threshold variant '" + name + "'");
}

ThresholdFormula threshold(ThresholdVariant variant, const ThresholdParams& p) {
  ThresholdFormula f;
  f.variant = variant;
  f.params = p;
  switch (variant) {
    case ThresholdVariant::Little:
      f.subject = "k";
      f.bound = p.d * (p.e + p.a - 1) - (p.n + 1);
      break;
    case ThresholdVariant::Veronese:
      f.subject = "k";
      f.bound = Scalar(mpq_class(3, 2)) * (p.e + p.a - 1) - (p.n + 1);
      f.strict = true;
      break;
    case ThresholdVariant::Second:
      f.subject = "a";
      f.bound = p.n - 3 * p.r - 1;
      f.strict = true;
      f.twist = 2 * p.a - 1;
      break;
  }
  return f;
}

bool ThresholdFormula::admits(const mpq_class& value) const {
  const auto b = bound.value();
  if (!b) throw InvalidArgument("symbolic_bound", "the bound " + bound.to_string() + " is symbolic");
  return strict ? value > *b : value >= *b;
}

std::string ThresholdFormula::statement() const {
  std::string out = subject + (strict ? " > " : " >= ") + bound.to_string();
  if (twist) out += "; twist " + twist->to_string();
  return out;
}

}  // namespace syzflip
