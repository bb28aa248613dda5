#pragma once

#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// The field A/lA for a monic irreducible l in A = F_q[T], realized as the
/// registered field F_{q^d}, d = deg l, with T mapped to the lexicographically
/// smallest root theta of l.
class ResidueField {
 public:
  /// Throws DomainError unless l is monic irreducible over F_q.
  explicit ResidueField(const Poly& l);

  const Poly& modulus() const noexcept { return modulus_; }
  FieldId base() const noexcept { return modulus_.field(); }
  FieldId field() const noexcept { return field_; }
  /// [A/lA : F_q].
  unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.deg()); }
  const FFElem& theta() const noexcept { return theta_; }

  FFElem reduce(const Poly& a) const;
  FFElem from_base(const FFElem& c) const { return embed(c, field_); }
  /// Canonical representative of degree < deg l.
  Poly lift(const FFElem& x) const;

 private:
  Poly modulus_;
  FieldId field_;
  FFElem theta_;
  LinearSolver lift_solver_;
  std::vector<FFElem> base_basis_;  // power basis of F_q over F_p
};

}  // namespace drinfeld
