#include "drinfeld/drinfeld_module.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

DrinfeldModule::DrinfeldModule(FieldId fq, std::vector<Poly> g) : fq_(fq), g_(std::move(g)) {
  if (g_.empty()) throw DomainError("a Drinfeld module needs rank at least 1");
  for (auto& c : g_) {
    if (!c.field().valid()) c = Poly(fq_);
    if (!(c.field() == fq_)) throw DomainError("coefficient over " + c.field().name() + ", expected " + fq_.name());
  }
  if (g_.back().is_zero()) throw DomainError("leading coefficient g_r must be nonzero");
}

DrinfeldModule DrinfeldModule::parse(std::string_view psi, FieldId fq) {
  std::vector<Poly> c = parse_tau_expression(psi, fq);
  if (c.empty() || !(c[0] == Poly::x(fq))) throw ParseError("psi_T must have constant term T: '" + std::string(psi) + "'");
  if (c.size() < 2) throw ParseError("psi_T must have positive tau-degree");
  return DrinfeldModule(fq, std::vector<Poly>(c.begin() + 1, c.end()));
}

SkewPolyA DrinfeldModule::psi_T() const {
  std::vector<Poly> c{Poly::x(fq_)};
  c.insert(c.end(), g_.begin(), g_.end());
  return SkewPolyA(PolyCoeffs{fq_}, std::move(c));
}

SkewPolyA psi_of(const DrinfeldModule& psi, const Poly& a) {
  if (a.is_zero()) throw DomainError("psi_of: a must be nonzero");
  const PolyCoeffs R{psi.base()};
  const SkewPolyA t = psi.psi_T();
  SkewPolyA acc(R);
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * t + SkewPolyA::constant(R, Poly::constant(a.coeff(i)));
  return acc;
}

namespace {

void require_prime(const Poly& p) {
  if (p.is_zero() || !p.is_monic() || p.deg() < 1 || !is_irreducible(p))
    throw DomainError("expected a monic irreducible polynomial");
}

}  // namespace

bool good_reduction_at(const DrinfeldModule& psi, const Poly& p) {
  require_prime(p);
  return !divides(p, psi.g(psi.rank()));
}

ReducedModule::ReducedModule(DrinfeldModule source, ResidueField k)
    : source_(std::move(source)), k_(std::move(k)), psibar_T_(reduce_skew(source_.psi_T(), k_)) {}

SkewPolyF ReducedModule::psibar(const Poly& a) const {
  if (a.is_zero()) return SkewPolyF(ring());
  SkewPolyF acc(ring());
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * psibar_T_ + scalar(a.coeff(i));
  return acc;
}

SkewPolyF ReducedModule::scalar(const FFElem& c) const { return SkewPolyF::constant(ring(), k_.from_base(c)); }

SkewPolyF ReducedModule::tau(std::size_t k) const { return SkewPolyF::tau(ring(), k); }

ReducedModule reduce_at(const DrinfeldModule& psi, const Poly& p) {
  if (!good_reduction_at(psi, p))
    throw BadReductionError("bad reduction at " + format_poly(p) + ": it divides g_" + std::to_string(psi.rank()) +
                            " = " + format_poly(psi.g(psi.rank())));
  return ReducedModule(psi, ResidueField(p));
}

}  // namespace drinfeld
