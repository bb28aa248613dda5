#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/residue_field.hpp"

namespace drinfeld {

/// Coefficients in a finite field L containing F_q; tau c = c^q tau.
struct FieldCoeffs {
  using Elem = FFElem;
  FieldId field;
  unsigned q_degree;  // log_p q

  Elem zero() const { return FFElem::zero(field); }
  Elem one() const { return FFElem::one(field); }
  Elem twist(const Elem& c, unsigned k = 1) const {
    return c.frobenius(static_cast<long>(q_degree) * static_cast<long>(k));
  }
  bool contains(const Elem& c) const { return c.field() == field; }
  friend bool operator==(const FieldCoeffs& a, const FieldCoeffs& b) {
    return a.field == b.field && a.q_degree == b.q_degree;
  }
};

/// Coefficients in A = F_q[T]; the q-power map is a(T) -> a(T^q) because
/// F_q is fixed pointwise.
struct PolyCoeffs {
  using Elem = Poly;
  FieldId base;

  Elem zero() const { return Poly(base); }
  Elem one() const { return Poly::constant(FFElem::one(base)); }
  Elem twist(const Elem& c, unsigned k = 1) const;
  bool contains(const Elem& c) const { return c.is_zero() || c.field() == base; }
  friend bool operator==(const PolyCoeffs& a, const PolyCoeffs& b) { return a.base == b.base; }
};

/// Twisted polynomial sum c_i tau^i, low tau-degree first.
template <class Ring>
class SkewPolynomial {
 public:
  using Elem = typename Ring::Elem;

  explicit SkewPolynomial(Ring ring) : ring_(std::move(ring)) {}
  SkewPolynomial(Ring ring, std::vector<Elem> coeffs);

  static SkewPolynomial constant(Ring ring, Elem c);
  /// c tau^k.
  static SkewPolynomial monomial(Ring ring, Elem c, std::size_t k);
  static SkewPolynomial tau(Ring ring, std::size_t k = 1);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  /// tau-degree, -1 for zero.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }

  SkewPolynomial operator+(const SkewPolynomial& o) const;
  SkewPolynomial operator-(const SkewPolynomial& o) const;
  SkewPolynomial operator-() const;
  /// Product under tau c = c^q tau.
  SkewPolynomial operator*(const SkewPolynomial& o) const;
  /// Left multiplication by a scalar.
  SkewPolynomial scaled(const Elem& c) const;
  /// tau^k * f.
  SkewPolynomial tau_times(std::size_t k) const;

  friend bool operator==(const SkewPolynomial& a, const SkewPolynomial& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_;
  }

 private:
  void normalize();
  void check_ring(const SkewPolynomial& o) const;
  Ring ring_;
  std::vector<Elem> c_;
};

using SkewPolyF = SkewPolynomial<FieldCoeffs>;
using SkewPolyA = SkewPolynomial<PolyCoeffs>;

extern template class SkewPolynomial<FieldCoeffs>;
extern template class SkewPolynomial<PolyCoeffs>;

struct SkewDivMod {
  SkewPolyF quot;
  SkewPolyF rem;
};

/// f = quot * g + rem with deg rem < deg g. Field coefficients only: over A
/// the leading coefficients are not units, so no overload exists.
SkewDivMod skew_right_divmod(const SkewPolyF& f, const SkewPolyF& g);
/// True if g right-divides f.
bool right_divides(const SkewPolyF& g, const SkewPolyF& f);

/// sum c_i x^{q^i} for x in any extension of the coefficient field.
FFElem skew_eval(const SkewPolyF& f, const FFElem& x);

template <class Ring>
bool skew_commutes(const SkewPolynomial<Ring>& f, const SkewPolynomial<Ring>& g) {
  return f * g == g * f;
}

template <class Ring>
SkewPolynomial<Ring> skew_mul(const SkewPolynomial<Ring>& f, const SkewPolynomial<Ring>& g) {
  return f * g;
}

/// Reduces every coefficient through A -> A/l.
SkewPolyF reduce_skew(const SkewPolyA& f, const ResidueField& k);

/// Text forms, ascending in tau, e.g. `T+1*t+1*t^2`. Field coefficients are
/// printed through their canonical lift to A.
std::string format_skew(const SkewPolyA& f);
std::string format_skew(const SkewPolyF& f, const ResidueField& k);
SkewPolyA parse_skew(std::string_view s, FieldId fq);

}  // namespace drinfeld
