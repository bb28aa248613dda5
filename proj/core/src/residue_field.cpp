#include "drinfeld/residue_field.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

FieldId residue_field_of(const Poly& l) {
  if (l.is_zero() || !l.is_monic() || l.deg() < 1) throw DomainError("residue field needs a monic nonconstant modulus");
  const FieldId fq = l.field();
  return FieldRegistry::instance().field(fq.characteristic(), fq.degree() * static_cast<unsigned>(l.deg()));
}

FFElem smallest_root(const Poly& l, FieldId L) {
  if (!is_irreducible(l)) throw DomainError("residue field modulus is not irreducible");
  auto r = roots(l.embedded(L));
  if (r.size() != static_cast<std::size_t>(l.deg())) throw VerificationError("irreducible modulus does not split");
  return r.front();
}

// Columns are the F_p coordinates of b_i * theta^j, index i + e*j.
MatrixFp lift_matrix(FieldId L, const FFElem& theta, const std::vector<FFElem>& base_basis, unsigned d) {
  const unsigned e = static_cast<unsigned>(base_basis.size());
  MatrixFp m(L.characteristic(), L.degree(), e * d);
  FFElem t = FFElem::one(L);
  for (unsigned j = 0; j < d; ++j) {
    for (unsigned i = 0; i < e; ++i) m.set_column(i + e * j, (base_basis[i] * t).coords());
    t *= theta;
  }
  return m;
}

std::vector<FFElem> power_basis_in(FieldId fq, FieldId L) {
  std::vector<FFElem> out;
  FFElem g = embed(FFElem::gen(fq), L), t = FFElem::one(L);
  for (unsigned i = 0; i < fq.degree(); ++i) {
    out.push_back(t);
    t *= g;
  }
  return out;
}

}  // namespace

ResidueField::ResidueField(const Poly& l)
    : modulus_(l),
      field_(residue_field_of(l)),
      theta_(smallest_root(l, field_)),
      lift_solver_(lift_matrix(field_, theta_, power_basis_in(l.field(), field_), static_cast<unsigned>(l.deg()))),
      base_basis_(power_basis_in(l.field(), field_)) {}

FFElem ResidueField::reduce(const Poly& a) const {
  if (a.is_zero()) return FFElem::zero(field_);
  return (a % modulus_).eval(theta_);
}

Poly ResidueField::lift(const FFElem& x) const {
  if (!(x.field() == field_)) throw DomainError("ResidueField::lift: element not in " + field_.name());
  auto sol = lift_solver_.solve(x.coords());
  if (!sol) throw VerificationError("ResidueField::lift: coordinates not found");
  const FieldId fq = base();
  const unsigned e = fq.degree();
  std::vector<FFElem> coeffs;
  for (unsigned j = 0; j < degree(); ++j) {
    Coords c(e);
    for (unsigned i = 0; i < e; ++i) c[i] = (*sol)[i + e * j];
    coeffs.emplace_back(fq, std::move(c));
  }
  return Poly(fq, std::move(coeffs));
}

}  // namespace drinfeld
