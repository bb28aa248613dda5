#include "drinfeld/skew_poly.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"

namespace drinfeld {

namespace {

bool is_zero_elem(const FFElem& c) { return c.is_zero(); }
bool is_zero_elem(const Poly& c) { return c.is_zero(); }

std::uint64_t small_order(FieldId f) {
  const BigInt q = f.order();
  if (q > BigInt(1) << 32) throw ResourceError("q too large for coefficient inflation");
  return static_cast<std::uint64_t>(q);
}

}  // namespace

Poly PolyCoeffs::twist(const Poly& c, unsigned k) const {
  if (c.is_constant()) return c;
  std::uint64_t stride = 1;
  const std::uint64_t q = small_order(base);
  for (unsigned i = 0; i < k; ++i) {
    if (stride > (std::uint64_t{1} << 40) / q) throw ResourceError("twisted coefficient degree overflow");
    stride *= q;
  }
  return c.inflate(stride);
}

template <class Ring>
SkewPolynomial<Ring>::SkewPolynomial(Ring ring, std::vector<Elem> coeffs)
    : ring_(std::move(ring)), c_(std::move(coeffs)) {
  for (auto& c : c_) {
    if (!ring_.contains(c)) throw DomainError("skew coefficient outside the coefficient ring");
    if constexpr (std::is_same_v<Elem, Poly>) {
      if (!c.field().valid()) c = ring_.zero();
    }
  }
  normalize();
}

template <class Ring>
void SkewPolynomial<Ring>::normalize() {
  while (!c_.empty() && is_zero_elem(c_.back())) c_.pop_back();
}

template <class Ring>
void SkewPolynomial<Ring>::check_ring(const SkewPolynomial& o) const {
  if (!(ring_ == o.ring_)) throw DomainError("skew polynomials over different coefficient rings");
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::constant(Ring ring, Elem c) {
  std::vector<Elem> v;
  v.push_back(std::move(c));
  return SkewPolynomial(std::move(ring), std::move(v));
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::monomial(Ring ring, Elem c, std::size_t k) {
  std::vector<Elem> v(k + 1, ring.zero());
  v[k] = std::move(c);
  return SkewPolynomial(std::move(ring), std::move(v));
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::tau(Ring ring, std::size_t k) {
  Elem one = ring.one();
  return monomial(std::move(ring), std::move(one), k);
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::operator+(const SkewPolynomial& o) const {
  check_ring(o);
  SkewPolynomial r = *this;
  if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), ring_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
  r.normalize();
  return r;
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::operator-(const SkewPolynomial& o) const {
  check_ring(o);
  SkewPolynomial r = *this;
  if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), ring_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] - o.c_[i];
  r.normalize();
  return r;
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::operator-() const {
  SkewPolynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::operator*(const SkewPolynomial& o) const {
  check_ring(o);
  if (c_.empty() || o.c_.empty()) return SkewPolynomial(ring_);
  std::vector<Elem> out(c_.size() + o.c_.size() - 1, ring_.zero());
  // (f_i tau^i)(g_j tau^j) = f_i g_j^{q^i} tau^{i+j}
  std::vector<Elem> tw = o.c_;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i > 0)
      for (auto& g : tw) g = ring_.twist(g, 1);
    if (is_zero_elem(c_[i])) continue;
    for (std::size_t j = 0; j < tw.size(); ++j) out[i + j] = out[i + j] + c_[i] * tw[j];
  }
  return SkewPolynomial(ring_, std::move(out));
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::scaled(const Elem& c) const {
  SkewPolynomial r = *this;
  for (auto& x : r.c_) x = c * x;
  r.normalize();
  return r;
}

template <class Ring>
SkewPolynomial<Ring> SkewPolynomial<Ring>::tau_times(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> out(k, ring_.zero());
  for (const auto& c : c_) out.push_back(ring_.twist(c, static_cast<unsigned>(k)));
  return SkewPolynomial(ring_, std::move(out));
}

template class SkewPolynomial<FieldCoeffs>;
template class SkewPolynomial<PolyCoeffs>;

SkewDivMod skew_right_divmod(const SkewPolyF& f, const SkewPolyF& g) {
  if (!(f.ring() == g.ring())) throw DomainError("skew division over different coefficient rings");
  if (g.is_zero()) throw DomainError("skew division by zero");
  const FieldCoeffs& R = f.ring();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<FFElem> r = f.coeffs();
  if (r.size() <= dg) return {SkewPolyF(R), f};
  std::vector<FFElem> q(r.size() - dg, R.zero());
  // twisted copies of g, indexed by shift s: g_j^{q^s}
  std::vector<FFElem> tw = g.coeffs();
  std::vector<std::vector<FFElem>> shifts{tw};
  for (std::size_t s = 1; s < q.size(); ++s) {
    for (auto& c : tw) c = R.twist(c, 1);
    shifts.push_back(tw);
  }
  for (std::size_t top = r.size(); top-- > dg;) {
    if (r[top].is_zero()) continue;
    const std::size_t s = top - dg;
    const auto& gs = shifts[s];
    const FFElem c = r[top] / gs[dg];
    q[s] = c;
    for (std::size_t j = 0; j <= dg; ++j) r[s + j] -= c * gs[j];
  }
  r.resize(dg, R.zero());
  return {SkewPolyF(R, std::move(q)), SkewPolyF(R, std::move(r))};
}

bool right_divides(const SkewPolyF& g, const SkewPolyF& f) { return skew_right_divmod(f, g).rem.is_zero(); }

FFElem skew_eval(const SkewPolyF& f, const FFElem& x) {
  const FieldCoeffs& R = f.ring();
  if (x.field().characteristic() != R.field.characteristic() || x.field().degree() % R.field.degree() != 0)
    throw DomainError("skew_eval: " + x.field().name() + " does not contain " + R.field.name());
  FFElem acc = FFElem::zero(x.field());
  FFElem xp = x;
  const Embedding* e =
      x.field() == R.field ? nullptr : &FieldRegistry::instance().embedding(R.field, x.field());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) xp = xp.frobenius(R.q_degree);
    const FFElem& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    acc += (e ? e->apply(c) : c) * xp;
  }
  return acc;
}

SkewPolyF reduce_skew(const SkewPolyA& f, const ResidueField& k) {
  std::vector<FFElem> out;
  for (const auto& c : f.coeffs()) out.push_back(k.reduce(c));
  return SkewPolyF(FieldCoeffs{k.field(), k.base().degree()}, std::move(out));
}

namespace {

std::string format_terms(const std::vector<Poly>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Poly& c = coeffs[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = format_poly(c);
    } else {
      std::string f = format_factor(c);
      term = (f.empty() ? "1" : f) + "*t";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string format_skew(const SkewPolyA& f) { return format_terms(f.coeffs()); }

std::string format_skew(const SkewPolyF& f, const ResidueField& k) {
  std::vector<Poly> lifted;
  for (const auto& c : f.coeffs()) lifted.push_back(k.lift(c));
  return format_terms(lifted);
}

SkewPolyA parse_skew(std::string_view s, FieldId fq) {
  return SkewPolyA(PolyCoeffs{fq}, parse_tau_expression(s, fq));
}

}  // namespace drinfeld
