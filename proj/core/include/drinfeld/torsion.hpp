#pragma once

#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/poly_matrix.hpp"

namespace drinfeld {

struct TorsionOptions {
  /// Largest s tried for the splitting extension F_{p^s}; the field degree
  /// cap of the registry applies independently.
  unsigned max_splitting_degree = 10000;
};

/// psi[a] over the reduction, with its Frobenius action.
struct TorsionBasis {
  Poly modulus;
  /// F_p-degree s of the extension of F_p where the a-torsion is rational.
  unsigned splitting_degree = 0;
  FieldId splitting_extension;
  std::vector<FFElem> generators;  // A/aA-basis
  /// Column k holds the coordinates of Frob(generators[k]); entries are
  /// residues mod a.
  PolyMatrix frobenius_matrix;
};

/// Smallest s such that psibar_a right-divides tau^{ns} - 1, i.e. the
/// a-torsion is rational over F_{p^s}.
unsigned torsion_splitting_degree(const ReducedModule& m, const Poly& a, const TorsionOptions& opt = {});

/// Throws DomainError if a is constant or shares a factor with p, and
/// ResourceError when the splitting extension exceeds a cap.
TorsionBasis torsion_basis(const ReducedModule& m, const Poly& a, const TorsionOptions& opt = {});

/// Nonunit monic invariant factors of the A-module F_p with T acting
/// through psibar_T.
std::vector<Poly> module_structure_oracle(const ReducedModule& m);

}  // namespace drinfeld
