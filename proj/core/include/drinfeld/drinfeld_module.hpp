#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/residue_field.hpp"
#include "drinfeld/skew_poly.hpp"

namespace drinfeld {

/// A Drinfeld F_q[T]-module over F = F_q(T) with A-integral coefficients,
/// psi_T = T + g_1 tau + ... + g_r tau^r.
class DrinfeldModule {
 public:
  /// g holds g_1, ..., g_r; trailing zeros are rejected rather than trimmed.
  DrinfeldModule(FieldId fq, std::vector<Poly> g);

  /// Skew text form such as `T+1*t+1*t^2`; the constant term must be T.
  static DrinfeldModule parse(std::string_view psi, FieldId fq);

  FieldId base() const noexcept { return fq_; }
  unsigned rank() const noexcept { return static_cast<unsigned>(g_.size()); }
  /// g_i for 1 <= i <= r.
  const Poly& g(unsigned i) const { return g_.at(i - 1); }
  const std::vector<Poly>& coefficients() const noexcept { return g_; }

  SkewPolyA psi_T() const;
  std::string str() const { return format_skew(psi_T()); }

 private:
  FieldId fq_;
  std::vector<Poly> g_;
};

/// psi_a for nonzero a; tau-degree r * deg a with constant term a.
SkewPolyA psi_of(const DrinfeldModule& psi, const Poly& a);

/// True iff p does not divide g_r. Throws DomainError unless p is monic
/// irreducible.
bool good_reduction_at(const DrinfeldModule& psi, const Poly& p);

/// psi tensored with F_p = A/p.
class ReducedModule {
 public:
  ReducedModule(DrinfeldModule source, ResidueField k);

  const DrinfeldModule& source() const noexcept { return source_; }
  const Poly& prime() const noexcept { return k_.modulus(); }
  const ResidueField& residue() const noexcept { return k_; }
  unsigned rank() const noexcept { return source_.rank(); }
  /// n = deg p; tau^n is the Frobenius endomorphism.
  unsigned n() const noexcept { return k_.degree(); }
  const SkewPolyF& psibar_T() const noexcept { return psibar_T_; }
  /// Reduction of psi_a, computed by Horner's rule inside F_p{tau}.
  SkewPolyF psibar(const Poly& a) const;
  /// Constant as an element of the coefficient field.
  SkewPolyF scalar(const FFElem& c) const;
  SkewPolyF tau(std::size_t k) const;
  FieldCoeffs ring() const { return psibar_T_.ring(); }

 private:
  DrinfeldModule source_;
  ResidueField k_;
  SkewPolyF psibar_T_;
};

/// Throws BadReductionError if p divides g_r.
ReducedModule reduce_at(const DrinfeldModule& psi, const Poly& p);

}  // namespace drinfeld
