#include "cmlocus/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "cmlocus/errors.hpp"
#include "cmlocus/free_module.hpp"

namespace cmlocus {

namespace {

FreeElement as_vector(const Polynomial& f) { return FreeElement::from_polynomial(f, 0, 1); }

std::vector<Polynomial> reduced_basis(const RingPtr& ring, std::span<const Polynomial> generators) {
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero() && g.is_constant()) return {Polynomial::constant(ring, 1)};
  }
  // Monomial ideals: the minimal generators already form the reduced basis.
  if (std::all_of(generators.begin(), generators.end(), [](const Polynomial& g) { return g.is_zero() || g.is_monomial(); })) {
    std::vector<Monomial> ms;
    for (const auto& g : generators) {
      if (!g.is_zero()) ms.push_back(g.leading_monomial());
    }
    std::sort(ms.begin(), ms.end(), [&](const Monomial& a, const Monomial& b) {
      return compare_monomials(a, b, *ring) > 0;
    });
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<Polynomial> out;
    for (const auto& m : ms) {
      bool redundant = std::any_of(ms.begin(), ms.end(), [&](const Monomial& d) { return !(d == m) && d.divides(m); });
      if (!redundant) out.push_back(Polynomial::term(ring, m, FieldElement::one(ring->field())));
    }
    return out;
  }
  GroebnerEngine engine(ring, 1);
  for (const auto& g : generators) {
    if (!g.is_zero()) engine.insert(as_vector(g));
  }
  std::vector<Polynomial> out;
  for (const auto& e : engine.reduced().elements) out.push_back(e.entry(0));
  return out;
}

// Ring whose variables are `front` followed by the remaining variables of
// `ring` in their original order, ordered by the elimination order for the
// first `front.size()` variables.
RingPtr elimination_ring(const Ring& ring, const std::vector<std::string>& front) {
  std::vector<std::string> vars = front;
  for (const auto& v : ring.variables()) {
    if (std::find(front.begin(), front.end(), v) == front.end()) vars.push_back(v);
  }
  return Ring::make(ring.field(), std::move(vars), MonomialOrder::elimination(front.size()));
}

// Gröbner basis elements of `generators` (in the elimination ring) that do
// not involve the first `block` variables, mapped back into `target`.
std::vector<Polynomial> eliminate_block(const RingPtr& elim, std::size_t block,
                                        const std::vector<Polynomial>& generators, const RingPtr& target) {
  std::vector<Polynomial> kept;
  for (const auto& g : reduced_basis(elim, generators)) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t v = 0; v < block; ++v) {
        if (t.monomial[v] != 0) return false;
      }
      return true;
    });
    if (free) kept.push_back(g.map_to(target));
  }
  return kept;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  std::vector<Polynomial> one{Polynomial::constant(ring, 1)};
  return buchberger(ring, one);
}

std::shared_ptr<const std::vector<Polynomial>> Ideal::basis() const {
  if (basis_) return basis_;
  return std::make_shared<const std::vector<Polynomial>>(reduced_basis(ring_, generators_));
}

Ideal Ideal::based() const {
  if (basis_) return *this;
  Ideal copy = *this;
  copy.basis_ = basis();
  return copy;
}

bool Ideal::is_zero() const { return generators_.empty(); }

bool Ideal::is_unit() const {
  auto b = basis();
  return b->size() == 1 && b->front().is_constant();
}

std::string Ideal::to_string() const {
  const auto& list = basis_ ? *basis_ : generators_;
  if (list.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (i) s += ", ";
    s += list[i].to_string();
  }
  return s + ")";
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  auto l = lcm(f.leading_monomial(), g.leading_monomial());
  auto a = f.times_term(l / f.leading_monomial(), f.leading_coeff().inverse());
  return a.minus_term_times(g.leading_coeff().inverse(), l / g.leading_monomial(), g);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
  std::vector<FreeElement> divisors;
  for (const auto& g : G) {
    require_same_ring(f.ring(), g.ring());
    if (!g.is_zero()) divisors.push_back(as_vector(g));
  }
  return divide(as_vector(f), divisors).remainder.entry(0);
}

Ideal buchberger(const RingPtr& ring, std::span<const Polynomial> generators) {
  Ideal I(ring, std::vector<Polynomial>(generators.begin(), generators.end()));
  I.basis_ = std::make_shared<const std::vector<Polynomial>>(reduced_basis(ring, I.generators_));
  return I;
}

Ideal buchberger(std::span<const Polynomial> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "buchberger needs a ring for an empty list");
  return buchberger(generators.front().ring(), generators);
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  return normal_form(f, *I.basis()).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  auto basis = I.basis();
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return normal_form(g, *basis).is_zero(); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return ideal_contains(I, J) && ideal_contains(J, I); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return buchberger(I.ring(), gens);
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  std::vector<Polynomial> gens;
  auto bi = I.basis(), bj = J.basis();
  for (const auto& f : *bi) {
    for (const auto& g : *bj) gens.push_back(f * g);
  }
  return buchberger(I.ring(), gens);
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return buchberger(ring, std::vector<Polynomial>{});
  auto t_name = ring->fresh_variable("t");
  auto S = elimination_ring(*ring, {t_name});
  auto t = Polynomial::variable(S, 0);
  auto one_minus_t = Polynomial::constant(S, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * f.map_to(S));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.map_to(S));
  return buchberger(ring, eliminate_block(S, 1, gens, ring));
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& d) {
  require_same_ring(f.ring(), d.ring());
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by zero");
  std::vector<Term> q;
  Polynomial h = f;
  while (!h.is_zero()) {
    if (!d.leading_monomial().divides(h.leading_monomial())) {
      throw Error(ErrorCode::InvalidArgument, d.to_string() + " does not divide " + f.to_string());
    }
    auto c = h.leading_coeff() / d.leading_coeff();
    auto m = h.leading_monomial() / d.leading_monomial();
    q.push_back({m, c});
    h = h.minus_term_times(c, m, d);
  }
  return Polynomial(f.ring(), std::move(q));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring());
  const auto& ring = I.ring();
  if (f.is_zero()) return Ideal::unit(ring);
  std::vector<Polynomial> fs{f};
  auto meet = ideal_intersection(I, Ideal(ring, fs));
  std::vector<Polynomial> gens;
  for (const auto& g : *meet.basis()) gens.push_back(exact_quotient(g, f));
  return buchberger(ring, gens);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::optional<Ideal> acc;
  for (const auto& f : J.generators()) {
    auto q = ideal_quotient(I, f);
    acc = acc ? ideal_intersection(*acc, q) : q;
  }
  return *acc;
}

Ideal eliminate(const Ideal& I, std::span<const std::string> keep) {
  const auto& ring = I.ring();
  for (const auto& k : keep) {
    if (!ring->variable_index(k)) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + k + "'");
  }
  std::vector<std::string> drop;
  for (const auto& v : ring->variables()) {
    if (std::find(keep.begin(), keep.end(), v) == keep.end()) drop.push_back(v);
  }
  if (drop.empty()) return I.based();
  auto S = elimination_ring(*ring, drop);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to(S));
  return buchberger(ring, eliminate_block(S, drop.size(), gens, ring));
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring());
  if (f.is_zero()) return true;
  const auto& ring = I.ring();
  auto vars = ring->variables();
  vars.push_back(ring->fresh_variable("t"));
  auto S = Ring::make(ring->field(), vars, MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_to(S));
  gens.push_back(Polynomial::constant(S, 1) - Polynomial::variable(S, vars.size() - 1) * f.map_to(S));
  return buchberger(S, gens).is_unit();
}

bool radical_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return radical_membership(g, I); });
}

bool radical_equal(const Ideal& I, const Ideal& J) { return radical_contains(I, J) && radical_contains(J, I); }

int krull_dim(const Ideal& I) {
  auto basis = I.basis();
  const auto n = I.ring()->num_variables();
  if (basis->size() == 1 && basis->front().is_constant()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& g : *basis) {
    std::uint32_t s = 0;
    const auto& m = g.leading_monomial();
    for (std::size_t v = 0; v < n; ++v) {
      if (m[v] != 0) s |= 1u << v;
    }
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    bool independent = std::none_of(supports.begin(), supports.end(),
                                    [&](std::uint32_t s) { return (s & ~mask) == 0; });
    if (independent) best = size;
  }
  return best;
}

bool contained_in_origin(const Ideal& I) {
  return std::all_of(I.generators().begin(), I.generators().end(),
                     [](const Polynomial& g) { return g.constant_coeff().is_zero(); });
}

bool is_monomial_ideal(const Ideal& I) {
  auto basis = I.basis();
  return std::all_of(basis->begin(), basis->end(), [](const Polynomial& g) { return g.is_zero() || g.is_monomial(); });
}

}  // namespace cmlocus
