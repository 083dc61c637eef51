#include "syzflip/monomial.hpp"

#include <algorithm>
#include <limits>

#include "syzflip/error.hpp"

namespace syzflip {

namespace {

void check_size(std::size_t nvars) {
  if (nvars > kMaxVariables) {
    throw InvalidArgument("at most " + std::to_string(kMaxVariables) +
                          " variables are supported, got " + std::to_string(nvars));
  }
}

std::uint16_t checked_exponent(long value) {
  if (value < 0 || value > std::numeric_limits<std::uint16_t>::max()) {
    throw InvalidArgument("monomial exponent out of range: " + std::to_string(value));
  }
  return static_cast<std::uint16_t>(value);
}

// grevlex on the half-open variable range [lo, hi): degree first, then the
// last differing variable with the smaller exponent wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0;
  int db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) {
  check_size(nvars);
  nvars_ = static_cast<std::uint16_t>(nvars);
}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exp_[i] = checked_exponent(exponents[i]);
    degree_ += exp_[i];
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  if (index >= nvars) throw InvalidArgument("variable index out of range");
  m.exp_[index] = checked_exponent(power);
  m.degree_ = m.exp_[index];
  return m;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(exp_.begin(), exp_.begin() + nvars_);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("monomials with different variable counts");
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = checked_exponent(static_cast<long>(a.exp_[i]) + b.exp_[i]);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("monomials with different variable counts");
  if (!b.divides(a)) throw InvalidArgument("monomial division is not exact");
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = a.exp_[i] - b.exp_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    r.degree_ += r.exp_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ULL;
  }
  return h;
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::Grevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    case Kind::Block: {
      const std::size_t split = std::min(split_, n);
      if (int c = grevlex_range(a, b, 0, split); c != 0) return c;
      return grevlex_range(a, b, split, n);
    }
  }
  return 0;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw RingMismatch("monomials with different variable counts");
  const int c = cmp(a, b);
  if (c > 0) return std::strong_ordering::greater;
  if (c < 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Block:
      return "block(" + std::to_string(split_) + ")";
  }
  return "unknown";
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars == 0) return out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nvars) {
      e[var] = left;
      out.emplace_back(std::span<const int>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace syzflip
