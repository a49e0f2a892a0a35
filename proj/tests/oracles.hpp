#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance suite. None of these go through Ext or the locus code.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cmlocus/groebner.hpp"
#include "cmlocus/modules.hpp"

namespace cmlocus::oracle {

inline Ideal maximal_ideal(const RingPtr& r) {
  std::vector<Polynomial> vars;
  for (std::size_t v = 0; v < r->num_variables(); ++v) vars.push_back(Polynomial::variable(r, v));
  return Ideal(r, vars);
}

/// Depth of R/J at the origin for a graded (e.g. monomial) ideal J: extend a
/// regular sequence of random linear forms while (J : m) == J, i.e. while m
/// is not associated. A random form then misses every associated prime with
/// high probability; unlucky draws are rejected by (J : l) == J.
inline int depth(const Ideal& J0, std::mt19937& rng) {
  const auto& r = J0.ring();
  auto m = maximal_ideal(r);
  Ideal J = J0;
  std::uniform_int_distribution<int> c(-7, 7);
  int depth = 0;
  for (;;) {
    if (!ideal_equal(ideal_quotient(J, m), J)) return depth;
    Polynomial l(r);
    for (const auto& x : m.generators()) l += x.scaled(FieldElement::from_integer(c(rng), r->field()));
    if (l.is_zero() || !ideal_equal(ideal_quotient(J, l), J)) continue;
    auto gens = J.generators();
    gens.push_back(l);
    J = buchberger(r, gens);
    ++depth;
  }
}

struct Local {
  int depth;
  int dim;
};

/// depth and dim of (R/I)_p for a monomial ideal I and p generated by the
/// variables in `vars`: inverting the other variables sets them to 1, which
/// leaves a monomial ideal I' of k[vars], and (R/I)_p is then the
/// localization of k(others)[vars]/I' at its origin. nullopt when p is
/// outside the support.
inline std::optional<Local> localize_monomial(const Ideal& I, const std::vector<std::size_t>& vars,
                                              std::mt19937& rng) {
  const auto& R = I.ring();
  if (vars.empty()) {
    if (!I.is_zero()) return std::nullopt;
    return Local{0, 0};
  }
  std::vector<std::string> names;
  for (auto v : vars) names.push_back(R->variables()[v]);
  auto S = Ring::make(R->field(), names, MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Monomial m(vars.size());
    for (std::size_t k = 0; k < vars.size(); ++k) m.set(k, g.leading_monomial()[vars[k]]);
    gens.push_back(Polynomial::term(S, m, FieldElement::one(S->field())));
  }
  Ideal J = buchberger(S, gens);
  if (J.is_unit()) return std::nullopt;
  return Local{depth(J, rng), krull_dim(J)};
}

/// Syzygies of the columns of A: a POT basis of the stacked vectors (a_l ; e_l)
/// in R^{r+m}; elements whose top block vanishes generate the syzygies.
inline std::vector<FreeElement> syzygies(const PolyMatrix& A) {
  const auto& R = A.ring();
  const std::size_t r = A.rows(), m = A.cols();
  std::vector<FreeElement> stacked;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<Polynomial> e;
    for (std::size_t i = 0; i < r; ++i) e.push_back(A(i, l));
    for (std::size_t k = 0; k < m; ++k) e.push_back(Polynomial::constant(R, k == l ? 1 : 0));
    stacked.push_back(FreeElement::from_entries(R, e));
  }
  std::vector<FreeElement> out;
  for (const auto& g : module_buchberger(stacked)) {
    if (g.leading_term().component < r) continue;
    auto e = g.entries();
    out.push_back(FreeElement::from_entries(R, std::vector<Polynomial>(e.begin() + static_cast<std::ptrdiff_t>(r), e.end())));
  }
  return out;
}

/// Every v in `vs` lies in the submodule generated by `gens`.
inline bool spans_contain(std::span<const FreeElement> gens, std::span<const FreeElement> vs) {
  if (vs.empty()) return true;
  if (gens.empty()) {
    for (const auto& v : vs) {
      if (!v.is_zero()) return false;
    }
    return true;
  }
  GroebnerEngine engine(gens.front().ring(), gens.front().rank());
  for (const auto& g : gens) engine.insert(g);
  engine.complete();
  for (const auto& v : vs) {
    if (!engine.normal_form(v).is_zero()) return false;
  }
  return true;
}

/// Monomial quotient modules used across the locus checks (at most six
/// variables). Each entry is (variables, generators).
struct MonomialExample {
  std::string label;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

inline std::vector<MonomialExample> monomial_suite() {
  return {
      {"two planes", {"x", "y", "z", "w"}, {"x*z", "x*w", "y*z", "y*w"}},
      {"embedded point", {"x", "y"}, {"x^2", "x*y"}},
      {"plane and line", {"x", "y", "z"}, {"x*y", "x*z"}},
      {"path", {"a", "b", "c", "d", "e"}, {"a*b", "b*c", "c*d", "d*e"}},
      {"hexagon", {"a", "b", "c", "d", "e", "f"}, {"a*b", "b*c", "c*d", "d*e", "e*f", "f*a"}},
      {"embedded line", {"x", "y", "z"}, {"x^2", "x*y^2", "x*z"}},
      {"two lines", {"x", "y", "z", "w"}, {"x", "y*z", "y*w"}},
      {"three planes", {"a", "b", "c", "d", "e", "f"},
       {"a*c*e", "a*c*f", "a*d*e", "a*d*f", "b*c*e", "b*c*f", "b*d*e", "b*d*f"}},
      {"mixed powers", {"x", "y", "z", "w", "v"}, {"x^2*y", "x*y^2*z", "z^3*w", "w^2*v"}},
      {"cycle with powers", {"a", "b", "c", "d", "e", "f"}, {"a^2*b", "b*c^2", "c*d*e", "e^2*f", "f*a"}},
      {"complete intersection", {"a", "b", "c", "d", "e", "f"}, {"a*b", "c^2*d", "e*f"}},
  };
}

}  // namespace cmlocus::oracle
