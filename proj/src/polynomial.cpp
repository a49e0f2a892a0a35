#include "cmlocus/polynomial.hpp"

#include <algorithm>

#include "cmlocus/errors.hpp"

namespace cmlocus {

namespace {

// Sorts descending and merges equal monomials.
std::vector<Term> normalize_terms(const MonomialOrder& order, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms) {
    if (t.monomial.size() != ring_->num_variables()) {
      throw Error(ErrorCode::InvalidArgument, "monomial length does not match the ring");
    }
    if (!t.coeff.belongs_to(ring_->field())) {
      throw Error(ErrorCode::FieldMismatch, "coefficient is not in " + ring_->field().to_string());
    }
  }
  terms_ = normalize_terms(ring_->order(), std::move(terms));
}

Polynomial Polynomial::constant(RingPtr ring, const FieldElement& c) {
  return term(ring, Monomial(ring->num_variables()), c);
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  auto f = FieldElement::from_integer(c, ring->field());
  return constant(std::move(ring), f);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->num_variables());
  m.set(index, 1);
  auto one = FieldElement::one(ring->field());
  return term(std::move(ring), m, one);
}

Polynomial Polynomial::term(RingPtr ring, const Monomial& m, const FieldElement& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

FieldElement Polynomial::constant_coeff() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return FieldElement::zero(ring_->field());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree() == terms_.front().monomial.degree(); });
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff().is_one()) return *this;
  return scaled(leading_coeff().inverse());
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const FieldElement& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // Multiplication by a monomial preserves the order of terms.
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::minus_term_times(const FieldElement& c, const Monomial& m, const Polynomial& g) const {
  const auto& order = ring_->order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    auto gm = g.terms_[j].monomial * m;
    if (i == terms_.size()) {
      r.terms_.push_back({gm, -(g.terms_[j++].coeff * c)});
      continue;
    }
    auto cmp = order.compare(terms_[i].monomial, gm);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back({gm, -(g.terms_[j++].coeff * c)});
    } else {
      auto coeff = terms_[i++].coeff - g.terms_[j++].coeff * c;
      if (!coeff.is_zero()) r.terms_.push_back({gm, std::move(coeff)});
    }
  }
  return r;
}

Polynomial Polynomial::map_to(const RingPtr& target) const {
  if (same_ring(ring_, target)) return *this;
  if (!(ring_->field() == target->field())) {
    throw Error(ErrorCode::FieldMismatch, "cannot map between different coefficient fields");
  }
  std::vector<std::size_t> index(ring_->num_variables(), SIZE_MAX);
  for (std::size_t v = 0; v < ring_->num_variables(); ++v) {
    if (auto k = target->variable_index(ring_->variables()[v])) index[v] = *k;
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->num_variables());
    for (std::size_t v = 0; v < ring_->num_variables(); ++v) {
      if (t.monomial[v] == 0) continue;
      if (index[v] == SIZE_MAX) {
        throw Error(ErrorCode::UnknownVariable,
                    "variable '" + ring_->variables()[v] + "' does not exist in " + target->to_string());
      }
      m.set(index[v], t.monomial[v]);
    }
    out.push_back({m, t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  Monomial one(f.ring_->num_variables());
  return f.minus_term_times(-FieldElement::one(f.ring_->field()), one, g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  Monomial one(f.ring_->num_variables());
  return f.minus_term_times(FieldElement::one(f.ring_->field()), one, g);
}

Polynomial operator-(const Polynomial& f) { return f.scaled(-FieldElement::one(f.ring_->field())); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  std::vector<Term> products;
  products.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) products.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
  }
  Polynomial r(f.ring_);
  r.terms_ = normalize_terms(f.ring_->order(), std::move(products));
  return r;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i) {
    if (!(f.terms_[i].monomial == g.terms_[i].monomial) || !(f.terms_[i].coeff == g.terms_[i].coeff)) return false;
  }
  return true;
}

std::string to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.variables()[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coeff.is_negative();
    auto magnitude = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += magnitude.to_string();
    } else if (magnitude.is_one()) {
      s += cmlocus::to_string(t.monomial, *ring_);
    } else {
      s += magnitude.to_string() + "*" + cmlocus::to_string(t.monomial, *ring_);
    }
  }
  return s;
}

}  // namespace cmlocus
