#pragma once

#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/residue_field.hpp"

namespace drinfeld {

/// Row-major square or rectangular matrix of polynomials.
using PolyMatrix = std::vector<std::vector<Poly>>;
using FieldMatrix = std::vector<std::vector<FFElem>>;

PolyMatrix identity_matrix(FieldId f, std::size_t n);
PolyMatrix matrix_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_mod(const PolyMatrix& a, const Poly& m);

/// Fraction-free (Bareiss) determinant; exact over F[x].
Poly determinant(const PolyMatrix& m);

/// Monic invariant factors d_1 | ... | d_n of a nonsingular square matrix.
/// Pivots on a minimal-degree entry, ties broken by row-major position.
/// Throws DomainError if the matrix is singular.
std::vector<Poly> smith_normal_form(PolyMatrix m);

/// Coefficients c_0, ..., c_{n-1}, 1 of det(x I - M) with entries reduced
/// modulo `mod` (division free, so `mod` need not be prime).
std::vector<Poly> charpoly_mod(const PolyMatrix& m, const Poly& mod);

/// Same over a field, coefficients as elements of that field.
std::vector<FFElem> charpoly(const FieldMatrix& m);

struct RationalCanonicalForm {
  FieldMatrix form;                    // block diagonal companion matrices
  std::vector<Poly> invariant_factors;  // nonunit, monic, dividing chain
};

/// Rational canonical form over a finite field. Two matrices are conjugate iff
/// their forms coincide.
RationalCanonicalForm rational_canonical_form(const FieldMatrix& m);

struct ResidueRationalCanonicalForm {
  PolyMatrix form;                      // entries as canonical residues mod l
  std::vector<Poly> invariant_factors;  // over the residue field
};

/// Rational canonical form of a matrix over A/lA, l prime.
ResidueRationalCanonicalForm rational_canonical_form(const PolyMatrix& m, const ResidueField& k);

}  // namespace drinfeld
