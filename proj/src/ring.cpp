#include "cmlocus/ring.hpp"

#include <algorithm>
#include <set>

#include "cmlocus/errors.hpp"

namespace cmlocus {

RingPtr Ring::make(Field field, std::vector<std::string> variables, MonomialOrder order) {
  if (variables.empty()) throw Error(ErrorCode::InvalidArgument, "a ring needs at least one variable");
  if (variables.size() > kMaxVariables) {
    throw Error(ErrorCode::InvalidArgument,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, "empty variable name");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidArgument, "duplicate variable name '" + v + "'");
  }
  return RingPtr(new Ring(field, std::move(variables), order));
}

std::optional<std::size_t> Ring::variable_index(std::string_view name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(field_, variables_, order); }

std::string Ring::fresh_variable(std::string_view stem) const {
  std::string name = "_" + std::string(stem);
  while (variable_index(name)) name = "_" + name;
  return name;
}

std::string Ring::to_string() const {
  std::string s = field_.to_string() + "[";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i) s += ",";
    s += variables_[i];
  }
  s += "] ";
  switch (order_.kind) {
    case OrderKind::Lex: s += "lex"; break;
    case OrderKind::GRevLex: s += "grevlex"; break;
    case OrderKind::Block: s += "block(" + std::to_string(order_.block) + ")"; break;
  }
  return s;
}

bool operator==(const Ring& a, const Ring& b) {
  return a.field_ == b.field_ && a.order_ == b.order_ && a.variables_ == b.variables_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) {
    throw Error(ErrorCode::RingMismatch, "operands live in different rings: " + (a ? a->to_string() : "?") +
                                             " vs " + (b ? b->to_string() : "?"));
  }
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const Ring& ring) {
  if (a.size() != ring.num_variables() || b.size() != ring.num_variables()) {
    throw Error(ErrorCode::InvalidArgument, "monomial length does not match the ring");
  }
  return ring.order().compare(a, b);
}

}  // namespace cmlocus
