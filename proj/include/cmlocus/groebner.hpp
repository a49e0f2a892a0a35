#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cmlocus/polynomial.hpp"

namespace cmlocus {

/// An ideal given by generators, optionally carrying its reduced Gröbner
/// basis (in the ring's order). The basis is attached at construction and
/// never changes afterwards.
class Ideal {
 public:
  /// Zero generators are dropped.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  bool has_basis() const { return basis_ != nullptr; }
  /// The reduced Gröbner basis; computed on the fly when not cached.
  std::shared_ptr<const std::vector<Polynomial>> basis() const;
  /// A copy carrying its reduced basis.
  Ideal based() const;

  bool is_zero() const;
  bool is_unit() const;

  /// "(x*z, x*w)" from the reduced basis if cached, else the generators.
  std::string to_string() const;

 private:
  friend Ideal buchberger(const RingPtr& ring, std::span<const Polynomial> generators);
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const std::vector<Polynomial>> basis_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Division remainder of f by G: divisors are tried in G's listed order and
/// the leading term is rewritten first; the result has no term divisible by
/// any leading term of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);

/// The reduced Gröbner basis of the generated ideal (Buchberger with the
/// coprime and chain criteria), cached on the returned Ideal.
Ideal buchberger(const RingPtr& ring, std::span<const Polynomial> generators);
Ideal buchberger(std::span<const Polynomial> generators);

bool ideal_membership(const Polynomial& f, const Ideal& I);
/// True iff J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I ∩ J by eliminating t from t·I + (1-t)·J.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
/// (I : f) = (1/f)·(I ∩ (f)); (I : 0) is the unit ideal.
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
/// (I : J) = ∩ (I : f_j) over generators of J; (I : (0)) is the unit ideal.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

/// I ∩ k[keep], returned as an ideal of I's ring. Throws UnknownVariable for
/// names not in the ring.
Ideal eliminate(const Ideal& I, std::span<const std::string> keep);

/// f ∈ rad(I), via 1 ∈ I + (1 - t·f).
bool radical_membership(const Polynomial& f, const Ideal& I);
/// rad(J) ⊆ rad(I).
bool radical_contains(const Ideal& I, const Ideal& J);
bool radical_equal(const Ideal& I, const Ideal& J);

/// dim R/I via the largest variable set independent modulo the leading term
/// ideal (exhaustive over the 2^n subsets); -1 for the unit ideal.
int krull_dim(const Ideal& I);

/// True iff every generator vanishes at the origin, i.e. I ⊆ (x_1..x_n).
bool contained_in_origin(const Ideal& I);
bool is_monomial_ideal(const Ideal& I);

/// Exact division of f by a divisor d that is known to divide it.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& d);

}  // namespace cmlocus
