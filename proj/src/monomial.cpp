#include "cmlocus/monomial.hpp"

#include <algorithm>
#include <limits>

#include "cmlocus/errors.hpp"

namespace cmlocus {

namespace {

void check_arity(std::size_t n) {
  if (n > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

std::uint16_t checked_exponent(long e) {
  if (e < 0 || e > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "exponent out of range: " + std::to_string(e));
  }
  return static_cast<std::uint16_t>(e);
}

// Reverse-lexicographic tie break of grevlex over [lo, hi): the monomial with
// the smaller exponent in the last differing variable is greater.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  int da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  return revlex_tail(a, b, lo, hi);
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_arity(nvars); }

Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const int> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, int e) {
  auto v = checked_exponent(e);
  degree_ = degree_ - exps_[i] + v;
  exps_[i] = v;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = checked_exponent(long{a.exps_[i]} + b.exps_[i]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exps_[i] = checked_exponent(long{a.exps_[i]} - b.exps_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const auto n = a.size();
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case OrderKind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, 0, n);
    case OrderKind::Block: {
      auto k = std::min(block, n);
      auto first = grevlex_range(a, b, 0, k);
      if (first != 0) return first;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace cmlocus
