#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cmlocus/polynomial.hpp"

namespace cmlocus {

struct ModuleTerm {
  std::uint32_t component;
  Monomial monomial;
  FieldElement coeff;
};

/// Position-over-term order on R^rank: a lower component index is greater;
/// within a component the ring order decides.
std::strong_ordering compare_module_monomials(std::uint32_t ca, const Monomial& a, std::uint32_t cb,
                                              const Monomial& b, const MonomialOrder& order);

/// An element of the free module R^rank, stored as a sparse term list sorted
/// descending in the position-over-term order.
class FreeElement {
 public:
  FreeElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  FreeElement(RingPtr ring, std::size_t rank, std::vector<ModuleTerm> terms);

  static FreeElement unit(RingPtr ring, std::size_t rank, std::size_t i);
  /// Entry i of `entries` becomes component i.
  static FreeElement from_entries(RingPtr ring, std::span<const Polynomial> entries);
  static FreeElement from_polynomial(const Polynomial& p, std::size_t component, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const ModuleTerm& leading_term() const { return terms_.front(); }

  Polynomial entry(std::size_t i) const;
  std::vector<Polynomial> entries() const;

  FreeElement scaled(const FieldElement& c) const;
  FreeElement times_term(const Monomial& m, const FieldElement& c) const;
  FreeElement times(const Polynomial& f) const;
  /// *this - c*m*g in one merge pass.
  FreeElement minus_term_times(const FieldElement& c, const Monomial& m, const FreeElement& g) const;
  FreeElement monic() const;
  /// All terms but the leading one.
  FreeElement tail() const;

  /// Degree in the grading where e_i has degree shifts[i] (all zero if empty).
  int degree(std::span<const int> shifts = {}) const;

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement& a, const FreeElement& b);

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<ModuleTerm> terms_;
};

/// Incremental Buchberger engine for submodules of R^rank.
///
/// With tracking enabled each basis element carries its expression in terms
/// of the inserted generators (an element of R^source_rank), updated through
/// every S-pair, reduction and interreduction step.
///
/// Pairs are selected by the normal strategy (smallest lcm degree first).
/// Buchberger's chain criterion is always applied; the coprime-leading-term
/// criterion only for rank 1, where it is valid.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, std::size_t rank);
  GroebnerEngine(RingPtr ring, std::size_t rank, std::size_t source_rank);

  /// Top-reduces `v` against the current elements and, if something is left,
  /// appends it and queues its S-pairs. Returns true if an element was added.
  bool insert(const FreeElement& v);
  bool insert(const FreeElement& v, const FreeElement& rep);
  /// Processes queued S-pairs until none are left.
  void complete();

  /// Full normal form against the current elements (divisors tried in order).
  FreeElement normal_form(const FreeElement& v) const;

  struct Basis {
    std::vector<FreeElement> elements;
    std::vector<FreeElement> representations;  // empty unless tracking
  };
  /// The reduced Gröbner basis (minimal, monic, tails reduced), sorted
  /// descending by leading term. Calls complete() first.
  Basis reduced();

  bool tracking() const { return source_rank_ != kUntracked; }

 private:
  static constexpr std::size_t kUntracked = static_cast<std::size_t>(-1);
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  void add_element(FreeElement v, FreeElement rep);
  std::size_t find_divisor(std::uint32_t component, const Monomial& m, std::size_t limit) const;
  bool chain_redundant(const Pair& p) const;

  RingPtr ring_;
  std::size_t rank_;
  std::size_t source_rank_;
  std::vector<FreeElement> elements_;
  std::vector<FreeElement> reps_;
  std::vector<Pair> pending_;
  std::vector<std::vector<bool>> done_;  // done_[j][i], i < j: pair settled
};

/// One division step record: v = sum_k quotients[k]*basis[k] + remainder.
struct Division {
  FreeElement quotients;  // in R^{basis.size()}
  FreeElement remainder;
};

/// Division with quotient tracking; divisors are tried in listed order and
/// the leading term is rewritten first.
Division divide(const FreeElement& v, std::span<const FreeElement> basis);

}  // namespace cmlocus
