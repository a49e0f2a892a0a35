#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace cmlocus {

/// Upper bound on the number of ring variables, including auxiliary
/// variables introduced by elimination (one extra slot is needed for the
/// t-trick and the Rabinowitsch trick).
inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector with inline storage; trivially copyable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  std::size_t size() const { return nvars_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  int degree() const { return static_cast<int>(degree_); }
  bool is_one() const { return degree_ == 0; }

  /// True iff *this divides other.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

enum class OrderKind { Lex, GRevLex, Block };

/// A monomial order on k[x_1..x_n] with x_1 > x_2 > ... > x_n.
/// Block(k) compares the first k variables by grevlex, breaking ties by
/// grevlex on the remaining ones; any monomial involving the first block
/// beats every monomial free of it, which is what elimination needs.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GRevLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::Block, k}; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace cmlocus
