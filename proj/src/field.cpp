#include "cmlocus/field.hpp"

#include "cmlocus/errors.hpp"

namespace cmlocus {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t reduce_mod(std::int64_t v, std::uint32_t p) {
  auto r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

[[noreturn]] void mismatch() {
  throw Error(ErrorCode::FieldMismatch, "field elements belong to different fields");
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(p);
}

std::string Field::to_string() const { return p_ == 0 ? "QQ" : "ZZ/" + std::to_string(p_); }

FieldElement FieldElement::rational(mpq_class q) {
  q.canonicalize();
  return FieldElement(std::move(q));
}

FieldElement FieldElement::residue(std::int64_t value, std::uint32_t p) {
  return FieldElement(Residue{reduce_mod(value, p), p});
}

FieldElement FieldElement::from_integer(long value, const Field& field) {
  if (field.is_rational()) return FieldElement(mpq_class(value));
  return residue(value, field.characteristic());
}

FieldElement FieldElement::from_rational(const mpq_class& value, const Field& field) {
  if (field.is_rational()) return rational(value);
  auto p = field.characteristic();
  auto den = mpz_mod(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "denominator vanishes in " + field.to_string());
  }
  std::uint64_t num = mpz_mod(value.get_num(), p);
  return FieldElement(Residue{static_cast<std::uint32_t>(num * inverse_mod(den, p) % p), p});
}

Field FieldElement::field() const {
  if (auto r = as_residue()) return Field::prime(r->p);
  return Field::rationals();
}

bool FieldElement::belongs_to(const Field& f) const {
  if (auto r = as_residue()) return r->p == f.characteristic();
  return f.is_rational();
}

bool FieldElement::is_zero() const {
  if (auto r = as_residue()) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::is_one() const {
  if (auto r = as_residue()) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

bool FieldElement::is_negative() const {
  if (auto q = as_rational()) return sgn(*q) < 0;
  return false;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (auto r = as_residue()) return FieldElement(Residue{inverse_mod(r->value, r->p), r->p});
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  return FieldElement(std::move(inv));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  if (auto qa = a.as_rational()) {
    auto qb = b.as_rational();
    if (!qb) mismatch();
    return FieldElement(mpq_class(*qa + *qb));
  }
  auto ra = a.as_residue();
  auto rb = b.as_residue();
  if (!rb || ra->p != rb->p) mismatch();
  return FieldElement(FieldElement::Residue{
      static_cast<std::uint32_t>((std::uint64_t{ra->value} + rb->value) % ra->p), ra->p});
}

FieldElement operator-(const FieldElement& a) {
  if (auto q = a.as_rational()) return FieldElement(mpq_class(-*q));
  auto r = a.as_residue();
  return FieldElement(FieldElement::Residue{r->value == 0 ? 0 : r->p - r->value, r->p});
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  if (auto qa = a.as_rational()) {
    auto qb = b.as_rational();
    if (!qb) mismatch();
    return FieldElement(mpq_class(*qa - *qb));
  }
  return a + (-b);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  if (auto qa = a.as_rational()) {
    auto qb = b.as_rational();
    if (!qb) mismatch();
    return FieldElement(mpq_class(*qa * *qb));
  }
  auto ra = a.as_residue();
  auto rb = b.as_residue();
  if (!rb || ra->p != rb->p) mismatch();
  return FieldElement(FieldElement::Residue{
      static_cast<std::uint32_t>(std::uint64_t{ra->value} * rb->value % ra->p), ra->p});
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (a.value_.index() != b.value_.index()) mismatch();
  return a * b.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }

std::string FieldElement::to_string() const {
  if (auto r = as_residue()) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace cmlocus
