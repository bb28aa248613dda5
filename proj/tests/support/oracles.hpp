#pragma once

// Slow reference computations used to freeze expected values. Each one takes
// a route that shares as little code as possible with the library path it
// checks: brute-force enumeration, direct expansion, or counting.

#include <cstdint>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/frobenius.hpp"
#include "drinfeld/survey.hpp"

namespace drinfeld::oracle {

/// (1/d) sum_{e | d} mu(e) q^{d/e}, in plain integers.
std::uint64_t necklace_count(std::uint64_t q, unsigned d);

/// Every monic polynomial of degree d, generated by counting in base q over
/// the registry's element list.
std::vector<Poly> all_monic(FieldId fq, unsigned d);

/// Irreducibility by trial division against all monic polynomials of degree
/// at most deg(f)/2.
bool irreducible_by_trial(const Poly& f);

/// mu(m) by trial division.
int mobius_by_trial(const Poly& m);

/// x^2 = a has a solution in A/p, by trying every residue.
bool is_square_by_search(const Poly& a, const Poly& p);

/// Field product by schoolbook multiplication of coordinate vectors followed by
/// reduction against the field's defining polynomial.
FFElem schoolbook_mul(const FFElem& a, const FFElem& b);

/// Product in L{tau} with twists computed as c^(q^k) by repeated powering.
SkewPolyF naive_skew_mul(const SkewPolyF& f, const SkewPolyF& g, std::uint64_t q);

/// psi_a rebuilt by expanding a = sum a_i T^i as sum a_i (psi_T)^i over A.
SkewPolyA psi_by_powers(const DrinfeldModule& psi, const Poly& a);

/// psibar_a as sum a_i(theta) psibar_T^i with every product taken by
/// naive_skew_mul.
SkewPolyF psibar_by_powers(const ReducedModule& m, const Poly& a);

/// P(tau^n) = 0, expanded with psibar_by_powers and naive_skew_mul.
bool weil_identity_by_expansion(const ReducedModule& m, const WeilPolynomial& w);

/// f is a product of linear factors, decided by stripping (x - r) for every
/// element r of the coefficient field.
bool splits_by_root_search(const Poly& f);

/// Order of GL_2(A/m) by enumerating every matrix and testing its determinant.
std::uint64_t gl2_order_by_count(const Poly& m);
/// Number of units of A/m by enumeration.
std::uint64_t units_by_count(const Poly& m);

/// Sum over monic squarefree m of degree <= max_deg of mu(m)/#PGL_2(A/m),
/// with every term found by enumeration.
Rational noncm_sum_by_enumeration(std::uint64_t q, unsigned max_deg);

/// True if every entry off the diagonal is zero and the diagonal is constant.
bool is_scalar(const PolyMatrix& m);

}  // namespace drinfeld::oracle
