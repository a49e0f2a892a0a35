#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmlocus/field.hpp"
#include "cmlocus/monomial.hpp"

namespace cmlocus {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// The ambient polynomial ring k[x_1..x_n] with a monomial order. All loci
/// are read at primes inside the homogeneous maximal ideal (x_1..x_n).
class Ring {
 public:
  /// Throws InvalidArgument on empty, duplicate or too many variable names.
  static RingPtr make(Field field, std::vector<std::string> variables,
                     MonomialOrder order = MonomialOrder::grevlex());

  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  /// Dimension of the ring, n.
  int dimension() const { return static_cast<int>(variables_.size()); }
  std::optional<std::size_t> variable_index(std::string_view name) const;

  RingPtr with_order(MonomialOrder order) const;
  /// A fresh variable name that does not clash with this ring's variables.
  std::string fresh_variable(std::string_view stem) const;

  /// "QQ[x,y,z,w] grevlex"
  std::string to_string() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  Ring(Field field, std::vector<std::string> variables, MonomialOrder order)
      : field_(field), variables_(std::move(variables)), order_(order) {}

  Field field_;
  std::vector<std::string> variables_;
  MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
/// Throws RingMismatch unless the rings agree.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Compares two monomials in the ring's order; throws InvalidArgument when a
/// length differs from the number of ring variables.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const Ring& ring);

}  // namespace cmlocus
