#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmlocus/field.hpp"
#include "cmlocus/monomial.hpp"
#include "cmlocus/ring.hpp"

namespace cmlocus {

struct Term {
  Monomial monomial;
  FieldElement coeff;
};

/// Sparse polynomial. Terms are kept strictly descending in the ring's
/// monomial order with no zero coefficients; the zero polynomial has no
/// terms and degree -1.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines like terms; drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial term(RingPtr ring, const Monomial& m, const FieldElement& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value at the origin.
  FieldElement constant_coeff() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const FieldElement& leading_coeff() const { return terms_.front().coeff; }
  int degree() const;
  /// True iff every term has the same total degree.
  bool is_homogeneous() const;

  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Monomial& m, const FieldElement& c) const;
  /// *this - c*m*g in a single merge pass.
  Polynomial minus_term_times(const FieldElement& c, const Monomial& m, const Polynomial& g) const;

  /// Re-expresses the polynomial in `target`, matching variables by name.
  /// Throws UnknownVariable if a variable in use is missing from `target`.
  Polynomial map_to(const RingPtr& target) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  /// Canonical print form: descending terms, explicit `*` and `^`,
  /// e.g. "x^2 - 3/2*x*y + 1".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Parses integer and a/b literals, variable names, + - * / ^, parentheses
/// and unary minus. Juxtaposed factors multiply ("2x", "x y"), and an
/// identifier that is not a variable name is accepted when it splits into a
/// product of variable names ("xz" in k[x,y,z,w]). Division is allowed only
/// by nonzero constants. Throws ParseError with the offending offset.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string to_string(const Monomial& m, const Ring& ring);

}  // namespace cmlocus
