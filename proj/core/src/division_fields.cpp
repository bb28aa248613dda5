#include "drinfeld/division_fields.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

void require_level(const Poly& a, const Poly& p) {
  if (a.deg() < 1) throw DomainError("level must be nonconstant");
  if (!gcd(a, p).is_one()) throw DomainError(format_poly(a) + " is not coprime to " + format_poly(p));
}

FFElem half(FieldId fq) {
  if (fq.characteristic() == 2) throw DomainError("odd q required");
  return FFElem::from_int(fq, 2).inverse();
}

Poly b1_of(const ReducedModule& m) {
  if (m.rank() == 2 && m.source().base().characteristic() != 2) return rank2_invariants(m).b_p;
  const auto b = invariant_factors(m);
  return b.empty() ? Poly::constant(FFElem::one(m.source().base())) : b.front();
}

}  // namespace

FrobeniusClassMatrix frobenius_class_matrix(const Rank2Invariants& inv, const Poly& a) {
  const Poly& p = inv.weil.prime;
  require_level(a, p);
  const FFElem h = half(p.field());
  const Poly diag = (inv.a_p * (-h)) % a;
  return {a, {{diag, (inv.delta_p * inv.b_p * h) % a}, {(inv.b_p * h) % a, diag}}};
}

FrobeniusClassMatrix frobenius_class_matrix(const ReducedModule& m, const Poly& a) {
  require_level(a, m.prime());
  return frobenius_class_matrix(rank2_invariants(m), a);
}

bool splits_completely(const Rank2Invariants& inv, const Poly& a) {
  require_level(a, inv.weil.prime);
  const Poly two = Poly::constant(FFElem::from_int(a.field(), 2));
  return ((inv.a_p + two) % a).is_zero() && (inv.b_p % a).is_zero();
}

bool splits_completely(const ReducedModule& m, const Poly& a) {
  require_level(a, m.prime());
  return splits_completely(rank2_invariants(m), a);
}

std::vector<Poly> ModuleStructure::nonunit() const {
  std::vector<Poly> out;
  if (d1.deg() > 0) out.push_back(d1);
  if (d2.deg() > 0) out.push_back(d2);
  return out;
}

ModuleStructure module_structure(const Rank2Invariants& inv) {
  const Poly& p = inv.weil.prime;
  const FieldId fq = p.field();
  const FFElem h = half(fq);
  const Poly one = Poly::constant(FFElem::one(fq));
  const Poly d1 = gcd(inv.b_p * h, inv.a_p * h + one);
  const Poly count = one + inv.a_p + p * inv.u_p;
  const DivMod dm = divmod(count, d1);
  if (!dm.rem.is_zero()) throw VerificationError("d_1 does not divide P(1) at " + format_poly(p));
  ModuleStructure out{d1, dm.quot.monic(), dm.quot.leading()};
  if (!divides(out.d1, out.d2)) throw VerificationError("d_1 does not divide d_2 at " + format_poly(p));
  return out;
}

ModuleStructure module_structure(const ReducedModule& m) { return module_structure(rank2_invariants(m)); }

bool jm_splits(const Poly& b1, const Poly& p, const Poly& m) {
  require_level(m, p);
  return divides(m, b1);
}

bool jm_splits(const ReducedModule& md, const Poly& m) {
  require_level(m, md.prime());
  return jm_splits(b1_of(md), md.prime(), m);
}

AbhyankarPolynomial abhyankar_poly(const DrinfeldModule& psi) {
  const FieldId fq = psi.base();
  const BigInt q = fq.order();
  if (q > 1 << 16) throw ResourceError("q too large for the Abhyankar polynomial");
  const std::size_t qs = static_cast<std::size_t>(q);
  const unsigned r = psi.rank();
  // exponent (q^i - 1)/(q - 1) = 1 + q + ... + q^{i-1}
  std::vector<std::size_t> ex{0};
  for (unsigned i = 1; i <= r; ++i) ex.push_back(ex.back() * qs + 1);
  AbhyankarPolynomial f{std::vector<Poly>(ex.back() + 1, Poly(fq))};
  f.coeffs[0] = Poly::x(fq);
  for (unsigned i = 1; i <= r; ++i) f.coeffs[ex[i]] = psi.g(i);

  // x f(x^{q-1}) must reproduce psi_T(x) = T x + sum g_i x^{q^i}
  std::size_t qi = 1;
  std::vector<Poly> lhs(ex.back() * (qs - 1) + 2, Poly(fq)), rhs = lhs;
  lhs[1] = Poly::x(fq);
  for (unsigned i = 1; i <= r; ++i) {
    qi *= qs;
    lhs[qi] = psi.g(i);
  }
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) rhs[k * (qs - 1) + 1] = f.coeffs[k];
  if (lhs != rhs) throw VerificationError("psi_T(x) != x f(x^{q-1})");
  return f;
}

AbhyankarSplit abhyankar_splits_mod(const ReducedModule& m, const Poly& b1, const WeilPolynomial& w) {
  const Poly& p = m.prime();
  const FieldId fq = p.field();
  const Poly T = Poly::x(fq);
  if (p == T) throw DomainError("the Abhyankar law excludes p = T");
  const AbhyankarPolynomial f = abhyankar_poly(m.source());
  const ResidueField& k = m.residue();
  std::vector<FFElem> fc;
  for (const auto& c : f.coeffs) fc.push_back(k.reduce(c));
  const Poly fbar(k.field(), std::move(fc));

  AbhyankarSplit out;
  out.splits = true;
  for (const auto& [g, mult] : factorize(fbar).factors)
    if (g.deg() != 1) {
      out.splits = false;
      break;
    }
  out.law_holds = out.splits == divides(T, b1);
  if (out.splits) {
    const Poly disc = discriminant(w);
    out.disc_condition = divides(T * T, disc);
    if (m.rank() == 2 && fq.characteristic() != 2 && out.disc_condition) {
      // d = a^2 - 4 u_p p, so p = u_p^{-1} (a/2)^2 - d / (4 u_p)
      const Poly& a = w.coeffs[1];
      const FFElem up = w.unit;
      const FFElem four = FFElem::from_int(fq, 4);
      const Poly d = a * a - p * (up * four);
      const DivMod dm = divmod(d, T * T);
      if (dm.rem.is_zero()) {
        out.u = up.inverse();
        out.alpha = a * half(fq);
        out.beta = dm.quot * (-(up * four).inverse());
        if (!(*out.alpha * *out.alpha * *out.u + T * T * *out.beta == p))
          throw VerificationError("Abhyankar witness does not reproduce p");
      }
    }
  }
  return out;
}

AbhyankarSplit abhyankar_splits_mod(const ReducedModule& m) {
  const WeilPolynomial w = m.rank() == 2 ? weil_rank2(m) : weil_general(m);
  return abhyankar_splits_mod(m, b1_of(m), w);
}

}  // namespace drinfeld
