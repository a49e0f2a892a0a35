#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cmlocus {

/// Coefficient field: the rationals, or a prime field F_p.
///
/// Prime-field mode is faster but the characteristic can change Betti
/// numbers (and with them the Ext modules), so results over F_p are only
/// trustworthy when p does not divide anything that matters for the input.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An element of a Field in canonical form: rationals have a positive,
/// coprime denominator, residues lie in [0, p).
class FieldElement {
 public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  FieldElement() : value_(mpq_class(0)) {}
  static FieldElement rational(mpq_class q);
  static FieldElement residue(std::int64_t value, std::uint32_t p);
  /// Image of an integer in `field`.
  static FieldElement from_integer(long value, const Field& field);
  /// Image of a rational in `field`; throws DivisionByZero when p divides
  /// the denominator.
  static FieldElement from_rational(const mpq_class& value, const Field& field);
  static FieldElement zero(const Field& field) { return from_integer(0, field); }
  static FieldElement one(const Field& field) { return from_integer(1, field); }

  Field field() const;
  bool belongs_to(const Field& f) const;
  bool is_zero() const;
  bool is_one() const;
  /// True for a rational with negative sign; residues are never negative.
  bool is_negative() const;

  const mpq_class* as_rational() const { return std::get_if<mpq_class>(&value_); }
  const Residue* as_residue() const { return std::get_if<Residue>(&value_); }

  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// "5/6", "-1/2", "3"; residues print as their representative in [0, p).
  std::string to_string() const;

 private:
  explicit FieldElement(std::variant<mpq_class, Residue> v) : value_(std::move(v)) {}
  std::variant<mpq_class, Residue> value_;
};

}  // namespace cmlocus
