#include "cmlocus/free_module.hpp"

#include <algorithm>

#include "cmlocus/budget.hpp"
#include "cmlocus/errors.hpp"

namespace cmlocus {

std::strong_ordering compare_module_monomials(std::uint32_t ca, const Monomial& a, std::uint32_t cb,
                                              const Monomial& b, const MonomialOrder& order) {
  if (ca != cb) return cb <=> ca;
  return order.compare(a, b);
}

namespace {

std::strong_ordering compare_terms(const ModuleTerm& a, const ModuleTerm& b, const MonomialOrder& order) {
  return compare_module_monomials(a.component, a.monomial, b.component, b.monomial, order);
}

void require_same_rank(const FreeElement& a, const FreeElement& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::RankMismatch, "free module ranks differ: " + std::to_string(a.rank()) + " vs " +
                                             std::to_string(b.rank()));
  }
}

}  // namespace

FreeElement::FreeElement(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms)
    : ring_(std::move(ring)), rank_(rank) {
  const auto& order = ring_->order();
  for (const auto& t : terms) {
    if (t.component >= rank_) throw Error(ErrorCode::RankMismatch, "component index out of range");
  }
  std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return compare_terms(a, b, order) > 0;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().component == t.component && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

FreeElement FreeElement::unit(RingPtr ring, std::size_t rank, std::size_t i) {
  FreeElement e(ring, rank);
  e.terms_.push_back({static_cast<std::uint32_t>(i), Monomial(ring->num_variables()),
                      FieldElement::one(ring->field())});
  return e;
}

FreeElement FreeElement::from_entries(RingPtr ring, std::span<const Polynomial> entries) {
  FreeElement e(ring, entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_same_ring(ring, entries[i].ring());
    for (const auto& t : entries[i].terms()) {
      e.terms_.push_back({static_cast<std::uint32_t>(i), t.monomial, t.coeff});
    }
  }
  return e;
}

FreeElement FreeElement::from_polynomial(const Polynomial& p, std::size_t component, std::size_t rank) {
  if (component >= rank) throw Error(ErrorCode::RankMismatch, "component index out of range");
  FreeElement e(p.ring(), rank);
  for (const auto& t : p.terms()) e.terms_.push_back({static_cast<std::uint32_t>(component), t.monomial, t.coeff});
  return e;
}

Polynomial FreeElement::entry(std::size_t i) const {
  std::vector<Term> terms;
  for (const auto& t : terms_) {
    if (t.component == i) terms.push_back({t.monomial, t.coeff});
  }
  return Polynomial(ring_, std::move(terms));
}

std::vector<Polynomial> FreeElement::entries() const {
  std::vector<std::vector<Term>> parts(rank_);
  for (const auto& t : terms_) parts[t.component].push_back({t.monomial, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(rank_);
  for (auto& p : parts) out.emplace_back(ring_, std::move(p));
  return out;
}

FreeElement FreeElement::scaled(const FieldElement& c) const {
  FreeElement r(ring_, rank_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.component, t.monomial, t.coeff * c});
  return r;
}

FreeElement FreeElement::times_term(const Monomial& m, const FieldElement& c) const {
  FreeElement r(ring_, rank_);
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.component, t.monomial * m, t.coeff * c});
  return r;
}

FreeElement FreeElement::times(const Polynomial& f) const {
  require_same_ring(ring_, f.ring());
  FreeElement r(ring_, rank_);
  for (const auto& t : f.terms()) r = r.minus_term_times(-t.coeff, t.monomial, *this);
  return r;
}

FreeElement FreeElement::minus_term_times(const FieldElement& c, const Monomial& m, const FreeElement& g) const {
  const auto& order = ring_->order();
  FreeElement r(ring_, rank_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size()) {
      r.terms_.push_back(terms_[i++]);
      continue;
    }
    const auto& gt = g.terms_[j];
    ModuleTerm shifted{gt.component, gt.monomial * m, FieldElement()};
    if (i == terms_.size()) {
      shifted.coeff = -(gt.coeff * c);
      r.terms_.push_back(std::move(shifted));
      ++j;
      continue;
    }
    auto cmp = compare_terms(terms_[i], shifted, order);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      shifted.coeff = -(gt.coeff * c);
      r.terms_.push_back(std::move(shifted));
      ++j;
    } else {
      shifted.coeff = terms_[i++].coeff - gt.coeff * c;
      ++j;
      if (!shifted.coeff.is_zero()) r.terms_.push_back(std::move(shifted));
    }
  }
  return r;
}

FreeElement FreeElement::tail() const {
  FreeElement r(ring_, rank_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

FreeElement FreeElement::monic() const {
  if (is_zero() || leading_term().coeff.is_one()) return *this;
  return scaled(leading_term().coeff.inverse());
}

int FreeElement::degree(std::span<const int> shifts) const {
  int d = -1;
  for (const auto& t : terms_) {
    int shift = shifts.empty() ? 0 : shifts[t.component];
    d = std::max(d, t.monomial.degree() + shift);
  }
  return d;
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
  require_same_rank(a, b);
  Monomial one(a.ring_->num_variables());
  return a.minus_term_times(-FieldElement::one(a.ring_->field()), one, b);
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
  require_same_rank(a, b);
  Monomial one(a.ring_->num_variables());
  return a.minus_term_times(FieldElement::one(a.ring_->field()), one, b);
}

bool operator==(const FreeElement& a, const FreeElement& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.component != t.component || !(s.monomial == t.monomial) || !(s.coeff == t.coeff)) return false;
  }
  return true;
}

std::string FreeElement::to_string() const {
  std::string s = "(";
  auto parts = entries();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += parts[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

GroebnerEngine::GroebnerEngine(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), rank_(rank), source_rank_(kUntracked) {}

GroebnerEngine::GroebnerEngine(RingPtr ring, std::size_t rank, std::size_t source_rank)
    : ring_(std::move(ring)), rank_(rank), source_rank_(source_rank) {}

std::size_t GroebnerEngine::find_divisor(std::uint32_t component, const Monomial& m, std::size_t limit) const {
  for (std::size_t k = 0; k < limit; ++k) {
    const auto& lt = elements_[k].leading_term();
    if (lt.component == component && lt.monomial.divides(m)) return k;
  }
  return limit;
}

bool GroebnerEngine::insert(const FreeElement& v) {
  if (tracking()) throw Error(ErrorCode::InvalidArgument, "tracked engine needs a representation");
  return insert(v, FreeElement(ring_, 0));
}

bool GroebnerEngine::insert(const FreeElement& v, const FreeElement& rep) {
  require_same_ring(ring_, v.ring());
  if (v.rank() != rank_) throw Error(ErrorCode::RankMismatch, "generator rank does not match the module");
  if (tracking() && rep.rank() != source_rank_) throw Error(ErrorCode::RankMismatch, "representation rank mismatch");
  FreeElement h = v;
  FreeElement hr = rep;
  while (!h.is_zero()) {
    const auto& lt = h.leading_term();
    auto k = find_divisor(lt.component, lt.monomial, elements_.size());
    if (k == elements_.size()) break;
    const auto& g = elements_[k];
    auto c = lt.coeff / g.leading_term().coeff;
    auto m = lt.monomial / g.leading_term().monomial;
    if (tracking()) hr = hr.minus_term_times(c, m, reps_[k]);
    h = h.minus_term_times(c, m, g);
  }
  if (h.is_zero()) return false;
  auto inv = h.leading_term().coeff.inverse();
  add_element(h.scaled(inv), tracking() ? hr.scaled(inv) : std::move(hr));
  return true;
}

void GroebnerEngine::add_element(FreeElement v, FreeElement rep) {
  const std::size_t n = elements_.size();
  const auto& lt = v.leading_term();
  done_.emplace_back(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& other = elements_[i].leading_term();
    if (other.component != lt.component) continue;
    done_[n][i] = false;
    pending_.push_back({i, n, lcm(other.monomial, lt.monomial)});
  }
  elements_.push_back(std::move(v));
  reps_.push_back(std::move(rep));
}

bool GroebnerEngine::chain_redundant(const Pair& p) const {
  auto settled = [&](std::size_t a, std::size_t b) { return a < b ? done_[b][a] : done_[a][b]; };
  auto component = elements_[p.i].leading_term().component;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k == p.i || k == p.j) continue;
    const auto& lt = elements_[k].leading_term();
    if (lt.component != component || !lt.monomial.divides(p.lcm)) continue;
    if (settled(p.i, k) && settled(p.j, k)) return true;
  }
  return false;
}

void GroebnerEngine::complete() {
  const auto& order = ring_->order();
  while (!pending_.empty()) {
    // Normal strategy: least lcm degree, then least lcm in the order.
    std::size_t best = 0;
    for (std::size_t q = 1; q < pending_.size(); ++q) {
      const auto& a = pending_[q];
      const auto& b = pending_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = q;
        continue;
      }
      auto c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = q;
    }
    Pair p = pending_[best];
    pending_[best] = pending_.back();
    pending_.pop_back();
    done_[p.j][p.i] = true;

    const auto& gi = elements_[p.i];
    const auto& gj = elements_[p.j];
    if (rank_ == 1 && gi.leading_term().monomial.coprime(gj.leading_term().monomial)) continue;
    if (chain_redundant(p)) continue;

    charge_reduction();
    auto one = FieldElement::one(ring_->field());
    auto mi = p.lcm / gi.leading_term().monomial;
    auto mj = p.lcm / gj.leading_term().monomial;
    // Elements are monic, so the S-element is mi*gi - mj*gj.
    FreeElement s = gi.times_term(mi, one).minus_term_times(one, mj, gj);
    FreeElement sr(ring_, 0);
    if (tracking()) sr = reps_[p.i].times_term(mi, one).minus_term_times(one, mj, reps_[p.j]);
    insert(s, sr);
  }
}

FreeElement GroebnerEngine::normal_form(const FreeElement& v) const {
  FreeElement h = v;
  FreeElement r(ring_, rank_);
  std::vector<ModuleTerm> rest;
  while (!h.is_zero()) {
    const auto& lt = h.leading_term();
    auto k = find_divisor(lt.component, lt.monomial, elements_.size());
    if (k == elements_.size()) {
      rest.push_back(lt);
      h = h.tail();
      continue;
    }
    const auto& g = elements_[k];
    h = h.minus_term_times(lt.coeff / g.leading_term().coeff, lt.monomial / g.leading_term().monomial, g);
  }
  return FreeElement(ring_, rank_, std::move(rest));
}

GroebnerEngine::Basis GroebnerEngine::reduced() {
  complete();
  const auto& order = ring_->order();
  // Minimal: drop elements whose leading term is divisible by another's
  // (for equal leading terms keep the first).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& li = elements_[i].leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < elements_.size() && !redundant; ++j) {
      if (j == i) continue;
      const auto& lj = elements_[j].leading_term();
      if (lj.component != li.component || !lj.monomial.divides(li.monomial)) continue;
      redundant = !(lj.monomial == li.monomial) || j < i;
    }
    if (!redundant) keep.push_back(i);
  }

  Basis out;
  for (auto i : keep) {
    const auto& g = elements_[i];
    FreeElement rep = tracking() ? reps_[i] : FreeElement(ring_, 0);
    std::vector<ModuleTerm> result{g.leading_term()};
    FreeElement h = g.tail();
    while (!h.is_zero()) {
      const auto& lt = h.leading_term();
      std::size_t k = keep.size();
      for (std::size_t q = 0; q < keep.size(); ++q) {
        const auto& lk = elements_[keep[q]].leading_term();
        if (lk.component == lt.component && lk.monomial.divides(lt.monomial)) {
          k = q;
          break;
        }
      }
      if (k == keep.size()) {
        result.push_back(lt);
        h = h.tail();
        continue;
      }
      const auto& d = elements_[keep[k]];
      auto c = lt.coeff / d.leading_term().coeff;
      auto m = lt.monomial / d.leading_term().monomial;
      if (tracking()) rep = rep.minus_term_times(c, m, reps_[keep[k]]);
      h = h.minus_term_times(c, m, d);
    }
    out.elements.emplace_back(ring_, rank_, std::move(result));
    if (tracking()) out.representations.push_back(std::move(rep));
  }

  std::vector<std::size_t> perm(out.elements.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto& la = out.elements[a].leading_term();
    const auto& lb = out.elements[b].leading_term();
    return compare_module_monomials(la.component, la.monomial, lb.component, lb.monomial, order) > 0;
  });
  Basis sorted;
  for (auto i : perm) {
    sorted.elements.push_back(std::move(out.elements[i]));
    if (tracking()) sorted.representations.push_back(std::move(out.representations[i]));
  }
  return sorted;
}

Division divide(const FreeElement& v, std::span<const FreeElement> basis) {
  const auto& ring = v.ring();
  Division d{FreeElement(ring, basis.size()), FreeElement(ring, v.rank())};
  std::vector<ModuleTerm> quotient_terms;
  std::vector<ModuleTerm> rest;
  FreeElement h = v;
  while (!h.is_zero()) {
    const auto& lt = h.leading_term();
    std::size_t k = 0;
    for (; k < basis.size(); ++k) {
      const auto& lk = basis[k].leading_term();
      if (lk.component == lt.component && lk.monomial.divides(lt.monomial)) break;
    }
    if (k == basis.size()) {
      rest.push_back(lt);
      h = h.tail();
      continue;
    }
    auto c = lt.coeff / basis[k].leading_term().coeff;
    auto m = lt.monomial / basis[k].leading_term().monomial;
    quotient_terms.push_back({static_cast<std::uint32_t>(k), m, c});
    h = h.minus_term_times(c, m, basis[k]);
  }
  d.quotients = FreeElement(ring, basis.size(), std::move(quotient_terms));
  d.remainder = FreeElement(ring, v.rank(), std::move(rest));
  return d;
}

}  // namespace cmlocus
