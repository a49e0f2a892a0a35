#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmlocus/duality.hpp"

namespace cmlocus {

/// A prime of R contained in the origin ideal m. Primes generated by
/// variables are recognised; anything else must be asserted by the caller.
class PrimeIdeal {
 public:
  enum class Provenance { MonomialVerified, UserAsserted };

  /// Throws InvalidArgument if the ideal is not proper, not inside m, or
  /// neither variable-generated nor asserted.
  static PrimeIdeal make(const Ideal& ideal, bool asserted = false);

  const Ideal& ideal() const { return ideal_; }
  Provenance provenance() const { return provenance_; }
  /// dim R/p.
  int dimension() const { return dimension_; }

 private:
  PrimeIdeal(Ideal ideal, Provenance provenance, int dimension)
      : ideal_(std::move(ideal)), provenance_(provenance), dimension_(dimension) {}
  Ideal ideal_;
  Provenance provenance_;
  int dimension_;
};

/// a_i(M); its variety is the i-th pseudo support.
const Ideal& psupp_ideal(const DeficiencyData& D, int i);
/// dim R/a_i, -1 when the pseudo support is empty.
int psd(const DeficiencyData& D, int i);

struct LocalDepthDim {
  int depth;
  int dim;
};

/// With k = min and t = max of {i <= dim M : a_i ⊆ p}: depth M_p = k - dim R/p
/// and dim M_p = t - dim R/p. Throws NotInSupport when no a_i lies in p.
LocalDepthDim depth_dim_at_prime(const DeficiencyData& D, const PrimeIdeal& p);
bool is_cm_at_prime(const DeficiencyData& D, const PrimeIdeal& p);

/// T(M) = ∩_{i<j<=d} (a_i + a_j); (1) when no pair is proper.
Ideal ncm_T_ideal(const DeficiencyData& D);
/// a(M) = a_0 ··· a_{d-1}, unit factors dropped.
Ideal ncm_a_ideal(const DeficiencyData& D);
/// ∏_{i<=s} a_i: its variety is {p : depth M_p + dim R/p <= s}.
Ideal shallow_locus_ideal(const DeficiencyData& D, int s);
/// Serre's (S_r) for equidimensional M: psd^i <= i - r for all i < dim M
/// with nonempty pseudo support.
bool serre_condition(const DeficiencyData& D, int r);

/// Sets of variable indices.
using VariableSet = std::vector<std::size_t>;

struct MonomialPrimes {
  std::vector<VariableSet> minimal;
  std::vector<VariableSet> associated;
};

/// Minimal primes (minimal vertex covers of the generators' supports) and
/// associated primes (variable primes of the form (I : f) with f a monomial
/// whose exponents stay below the largest generator exponents) of a
/// monomial ideal. Purely combinatorial. Throws InvalidArgument for
/// non-monomial input.
MonomialPrimes monomial_primes_oracle(const Ideal& I);

/// The ideal generated by the given variables.
Ideal variable_ideal(const RingPtr& ring, const VariableSet& vars);

enum class Equidimensionality { True, False, Unknown };

/// Decided through the oracle when Ann M is monomial, Unknown otherwise.
Equidimensionality is_equidimensional(const Ideal& annihilator);
Equidimensionality is_equidimensional(const PresentedModule& M);

struct PrimeReport {
  std::string name;
  bool in_support = false;
  int depth = 0;
  int dim = 0;
  bool cm = false;
};

struct LocusReport {
  int depth = 0;
  int dim = 0;
  std::vector<Ideal> a;
  std::vector<int> psd;
  Ideal ncm_T;
  Ideal ncm_a;
  /// Whether V(T(M)) = V(a(M)).
  bool ncm_matches_a = false;
  std::map<int, bool> serre;
  std::vector<PrimeReport> primes;
  Equidimensionality equidimensional = Equidimensionality::Unknown;
  bool equidimensional_asserted = false;
};

LocusReport locus_report(const DeficiencyData& D, const std::vector<std::pair<std::string, PrimeIdeal>>& primes,
                         bool asserted_equidimensional = false);

}  // namespace cmlocus
