#pragma once

#include <string>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/poly_matrix.hpp"
#include "drinfeld/torsion.hpp"

namespace drinfeld {

/// P(x) = x^r + c_{r-1} x^{r-1} + ... + c_0 with c_0 = unit * p.
struct WeilPolynomial {
  Poly prime;
  std::vector<Poly> coeffs;  // c_0, ..., c_{r-1}
  FFElem unit;

  unsigned rank() const noexcept { return static_cast<unsigned>(coeffs.size()); }
  /// All r + 1 coefficients, low degree first, as a polynomial in x over A
  /// would list them.
  std::vector<Poly> full() const;
  std::string str() const;
};

/// (-1)^{deg p} N(g_2 mod p)^{-1}, rank 2 only.
FFElem u_invariant(const ReducedModule& m);

/// Rank 2 through the closed recursion for a_p. Throws VerificationError if
/// the resulting a_p violates deg a_p <= deg(p)/2.
WeilPolynomial weil_rank2(const ReducedModule& m);

/// Sum psibar_{c_i} tau^{n i} + tau^{n r} == 0 in F_p{tau}.
bool weil_identity_holds(const ReducedModule& m, const WeilPolynomial& w);

struct WeilGeneralOptions {
  TorsionOptions torsion;
};

/// Auxiliary moduli used by weil_general: powers of primes other than p with
/// total degree at least deg p + 1, exponents spread evenly over the
/// linear primes first.
std::vector<Poly> auxiliary_moduli(const Poly& p);

/// Any rank, from characteristic polynomials of torsion Frobenius matrices
/// combined by CRT. Verifies c_0 = unit * p and the Weil identity.
WeilPolynomial weil_general(const ReducedModule& m, const WeilGeneralOptions& opt = {});

struct Rank2Invariants {
  WeilPolynomial weil;
  Poly a_p;
  FFElem u_p;
  Poly d;        // a_p^2 - 4 u_p p
  Poly b_p;      // monic
  Poly delta_p;  // d / b_p^2, not normalized
  Poly delta_monic;
  bool supersingular = false;
};

/// Requires rank 2 and odd q.
Rank2Invariants rank2_invariants(const ReducedModule& m);

/// True iff (2 pi + a_p)/m lies in End(psibar), i.e. psibar_m right-divides
/// 2 tau^n + psibar_{a_p}.
bool bp_membership(const ReducedModule& m, const Poly& a_p, const Poly& divisor);

/// A-basis of the centralizer of psibar_T in F_p{tau}.
struct EndLattice {
  std::vector<SkewPolyF> basis;  // basis[0] == 1
  /// mult[i][j] holds the A-coordinates of basis[i] * basis[j].
  std::vector<std::vector<std::vector<Poly>>> mult;
  std::vector<Poly> pi_coords;  // coordinates of tau^n
  unsigned window = 0;          // largest tau-degree examined

  unsigned rank() const noexcept { return static_cast<unsigned>(basis.size()); }
  /// Product of two coordinate vectors through the multiplication tensors.
  std::vector<Poly> multiply(const std::vector<Poly>& x, const std::vector<Poly>& y) const;
};

/// Throws InconclusiveBasisError if the degree window is exhausted.
EndLattice end_lattice(const ReducedModule& m);

/// b_1 | ... | b_{r-1}, monic, from the Smith form of the coordinates of
/// 1, pi, ..., pi^{r-1}.
std::vector<Poly> invariant_factors(const EndLattice& lattice);
std::vector<Poly> invariant_factors(const ReducedModule& m);

/// det of the Sylvester matrix of two polynomials in x with coefficients in A,
/// each given low degree first.
Poly resultant(const std::vector<Poly>& f, const std::vector<Poly>& g);
/// Monic generator of the discriminant ideal of P.
Poly discriminant(const WeilPolynomial& w);

struct DiscCheck {
  Poly disc_P;  // monic
  Poly disc_E;  // monic
  std::vector<Poly> b;
  bool holds = false;
};

/// disc(P) A = disc(E) (b_1 ... b_{r-1})^2. Requires gcd(r, q) = 1.
DiscCheck disc_check(const ReducedModule& m, const WeilPolynomial& w, const EndLattice& lattice);
DiscCheck disc_check(const ReducedModule& m);

}  // namespace drinfeld
