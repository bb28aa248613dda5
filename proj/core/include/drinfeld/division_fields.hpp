#pragma once

#include <optional>
#include <vector>

#include "drinfeld/frobenius.hpp"

namespace drinfeld {

/// [[-a_p/2, delta_p b_p/2], [b_p/2, -a_p/2]] reduced mod a.
struct FrobeniusClassMatrix {
  Poly modulus;
  PolyMatrix entries;
};

/// Rank 2, odd q, a nonconstant and coprime to p.
FrobeniusClassMatrix frobenius_class_matrix(const ReducedModule& m, const Poly& a);
FrobeniusClassMatrix frobenius_class_matrix(const Rank2Invariants& inv, const Poly& a);

/// a_p = -2 and b_p = 0 mod a.
bool splits_completely(const ReducedModule& m, const Poly& a);
bool splits_completely(const Rank2Invariants& inv, const Poly& a);

/// F_p as an A-module is A/d_1 + A/d_2 with d_1 | d_2.
struct ModuleStructure {
  Poly d1;
  Poly d2;
  FFElem discarded_unit;  // leading coefficient removed from d_2
  /// Nonunit factors only, matching module_structure_oracle.
  std::vector<Poly> nonunit() const;
};

ModuleStructure module_structure(const ReducedModule& m);
ModuleStructure module_structure(const Rank2Invariants& inv);

/// m | b_{p,1}. Uses the conductor path in rank 2 with odd q and the
/// endomorphism lattice otherwise.
bool jm_splits(const ReducedModule& md, const Poly& m);
/// Same predicate from precomputed b_{p,1}.
bool jm_splits(const Poly& b1, const Poly& p, const Poly& m);

/// f with psi_T(x) = x f(x^{q-1}); coefficients in A, low degree in y first.
struct AbhyankarPolynomial {
  std::vector<Poly> coeffs;
  std::size_t degree() const noexcept { return coeffs.size() - 1; }
};

AbhyankarPolynomial abhyankar_poly(const DrinfeldModule& psi);

struct AbhyankarSplit {
  bool splits = false;    // f mod p is a product of linear factors
  bool law_holds = false;  // splits == (T | b_{p,1})
  /// T^2 | disc(P) whenever splits; true vacuously otherwise.
  bool disc_condition = true;
  /// For rank 2 and a split prime: p = u alpha^2 + T^2 beta.
  std::optional<FFElem> u;
  std::optional<Poly> alpha;
  std::optional<Poly> beta;
};

/// Throws DomainError for p = T. Does not throw when the law fails; callers
/// inspect law_holds.
AbhyankarSplit abhyankar_splits_mod(const ReducedModule& m);
/// Variant reusing b_{p,1} and the Weil polynomial.
AbhyankarSplit abhyankar_splits_mod(const ReducedModule& m, const Poly& b1, const WeilPolynomial& w);

}  // namespace drinfeld
