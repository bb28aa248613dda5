#include "drinfeld/poly.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "drinfeld/errors.hpp"

namespace drinfeld {

long Degree::value() const {
  if (is_neg_inf()) throw DomainError("degree of the zero polynomial is -infinity");
  return v_;
}

std::string Degree::str() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

Poly::Poly(FieldId f, std::vector<FFElem> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (!(c.field() == f)) throw DomainError("Poly: coefficient outside " + f.name());
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const FFElem& c) { return Poly(c.field(), {c}); }

Poly Poly::constant(FieldId f, std::int64_t v) { return constant(FFElem::from_int(f, v)); }

Poly Poly::monomial(const FFElem& c, std::size_t k) {
  std::vector<FFElem> v(k + 1, FFElem::zero(c.field()));
  v[k] = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::x(FieldId f) { return monomial(FFElem::one(f), 1); }

Poly Poly::from_ints(FieldId f, std::initializer_list<std::int64_t> low_first) {
  return from_ints(f, std::vector<std::int64_t>(low_first));
}

Poly Poly::from_ints(FieldId f, const std::vector<std::int64_t>& low_first) {
  std::vector<FFElem> v;
  v.reserve(low_first.size());
  for (auto c : low_first) v.push_back(FFElem::from_int(f, c));
  return Poly(f, std::move(v));
}

Degree Poly::degree() const noexcept {
  return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
}

FFElem Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FFElem::zero(field_); }

const FFElem& Poly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return *this * c_.back().inverse();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.empty()) return *this;
  if (!field_.valid()) field_ = o.field_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FFElem::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.empty()) return *this;
  if (!field_.valid()) field_ = o.field_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FFElem::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly(field_.valid() ? field_ : o.field_);
  std::vector<FFElem> out(c_.size() + o.c_.size() - 1, FFElem::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, std::move(out));
}

Poly Poly::operator*(const FFElem& c) const {
  if (c.is_zero()) return Poly(field_);
  Poly r = *this;
  for (auto& v : r.c_) v *= c;
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator/(const Poly& o) const { return divmod(*this, o).quot; }
Poly Poly::operator%(const Poly& o) const { return divmod(*this, o).rem; }

Poly Poly::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  Poly r(field_);
  r.c_.assign(k, FFElem::zero(field_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<FFElem> out;
  out.reserve(c_.size() - 1);
  const std::uint32_t p = field_.characteristic();
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i].scaled(static_cast<std::uint32_t>(i % p)));
  return Poly(field_, std::move(out));
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(FFElem::one(field_)), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

FFElem Poly::eval(const FFElem& x) const {
  if (c_.empty()) return FFElem::zero(x.field());
  if (x.field() == field_) {
    FFElem acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  const Embedding& e = FieldRegistry::instance().embedding(field_, x.field());
  FFElem acc = e.apply(c_.back());
  for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + e.apply(c_[i]);
  return acc;
}

Poly Poly::embedded(FieldId target) const {
  if (target == field_) return *this;
  const Embedding& e = FieldRegistry::instance().embedding(field_, target);
  std::vector<FFElem> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(e.apply(c));
  return Poly(target, std::move(out));
}

Poly Poly::inflate(std::size_t k) const {
  if (c_.empty() || k == 1) return *this;
  std::vector<FFElem> out((c_.size() - 1) * k + 1, FFElem::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
  return Poly(field_, std::move(out));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!(a.c_[i] == b.c_[i])) return false;
  return true;
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& c : c_) h = (h ^ c.hash()) * 0x100000001b3ull;
  return h;
}

// Euclidean structure

DivMod divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  const FieldId F = g.field();
  if (f.deg() < g.deg()) return {Poly(F), f};
  std::vector<FFElem> r = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const FFElem inv = gc.back().inverse();
  std::vector<FFElem> q(r.size() - dg, FFElem::zero(F));
  for (std::size_t i = r.size(); i-- > dg;) {
    if (r[i].is_zero()) continue;
    const FFElem c = r[i] * inv;
    q[i - dg] = c;
    for (std::size_t k = 0; k <= dg; ++k) r[i - dg + k] -= c * gc[k];
  }
  r.resize(dg, FFElem::zero(F));
  return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly exact_div(const Poly& f, const Poly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw VerificationError("exact_div: divisor does not divide");
  return q;
}

bool divides(const Poly& g, const Poly& f) {
  if (g.is_zero()) return f.is_zero();
  return (f % g).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  const FieldId F = a.field().valid() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(FFElem::one(F)), s1(F);
  Poly t0(F), t1 = Poly::constant(FFElem::one(F));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FFElem inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  XGcd g = xgcd(a % m, m);
  if (!g.g.is_one()) throw DomainError("inverse_mod: not invertible");
  return g.s % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, const BigInt& e, const Poly& m) {
  if (e < 0) return powmod(inverse_mod(a, m), BigInt(-e), m);
  Poly r = Poly::constant(FFElem::one(m.field())) % m;
  Poly b = a % m;
  if (e == 0) return r;
  const std::size_t bits = msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (bit_test(e, static_cast<unsigned>(i))) r = mulmod(r, b, m);
  }
  return r;
}

Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size() || moduli.empty())
    throw DomainError("crt: need matching nonempty residue and modulus lists");
  Poly x = residues[0] % moduli[0];
  Poly M = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const Poly& m = moduli[i];
    if (!gcd(M, m).is_one()) throw DomainError("crt: moduli are not pairwise coprime");
    const Poly t = mulmod(residues[i] - x, inverse_mod(M, m), m);
    x = x + M * t;
    M = M * m;
    x = x % M;
  }
  return x;
}

// Factorization

namespace {

Poly one_like(const Poly& f) { return Poly::constant(FFElem::one(f.field())); }

Poly pth_root(const Poly& f) {
  const FieldId F = f.field();
  const std::uint32_t p = F.characteristic();
  std::vector<FFElem> out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f.coeffs()[i].frobenius(-1));
  return Poly(F, std::move(out));
}

void squarefree_rec(const Poly& f, unsigned mult, std::map<unsigned, Poly>& acc) {
  if (f.deg() <= 0) return;
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  unsigned i = 1;
  while (w.deg() > 0) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.deg() > 0) {
      auto [it, fresh] = acc.emplace(i * mult, fac);
      if (!fresh) it->second = it->second * fac;
    }
    w = std::move(y);
    c = exact_div(c, w);
    ++i;
  }
  if (c.deg() > 0) squarefree_rec(pth_root(c), mult * f.field().characteristic(), acc);
}

std::mt19937_64 seeded_rng(const Poly& f, unsigned d) {
  std::seed_seq seq{static_cast<std::uint64_t>(f.hash()), static_cast<std::uint64_t>(d),
                    static_cast<std::uint64_t>(f.size())};
  return std::mt19937_64(seq);
}

FFElem random_elem(FieldId F, std::mt19937_64& rng) {
  const std::uint32_t p = F.characteristic();
  Coords c(F.degree());
  for (auto& v : c) v = static_cast<std::uint32_t>(rng() % p);
  return FFElem(F, std::move(c));
}

void edf_rec(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.deg() == static_cast<long>(d)) {
    out.push_back(f);
    return;
  }
  const FieldId F = f.field();
  const std::uint32_t p = F.characteristic();
  const BigInt Q = F.order();
  for (;;) {
    std::vector<FFElem> a;
    for (long i = 0; i < f.deg(); ++i) a.push_back(random_elem(F, rng));
    Poly A(F, std::move(a));
    if (A.deg() < 1) continue;
    Poly b;
    if (p == 2) {
      // a + a^2 + ... + a^{2^{kd-1}}, k = [F : F_2]
      const unsigned steps = F.degree() * d;
      Poly t = A % f;
      b = t;
      for (unsigned i = 1; i < steps; ++i) {
        t = mulmod(t, t, f);
        b += t;
      }
    } else {
      BigInt e = 1;
      for (unsigned i = 0; i < d; ++i) e *= Q;
      b = powmod(A, (e - 1) / 2, f) - one_like(f);
    }
    Poly g = gcd(f, b);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      edf_rec(g, d, rng, out);
      edf_rec(exact_div(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.is_zero()) throw DomainError("is_irreducible: zero polynomial");
  if (f.deg() <= 0) return false;
  if (f.deg() == 1) return true;
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  const BigInt Q = f.field().order();
  Poly h = x;
  for (long i = 1; i <= g.deg() / 2; ++i) {
    h = powmod(h, Q, g);
    if (!gcd(g, h - x).is_one()) return false;
  }
  return true;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw DomainError("is_squarefree: zero polynomial");
  return gcd(f, f.derivative()).is_one();
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw DomainError("squarefree_decomposition: zero polynomial");
  std::map<unsigned, Poly> acc;
  squarefree_rec(f.monic(), 1, acc);
  std::vector<std::pair<Poly, unsigned>> out;
  for (auto& [m, g] : acc) out.emplace_back(std::move(g), m);
  return out;
}

std::vector<std::pair<unsigned, Poly>> distinct_degree_factorization(const Poly& f) {
  std::vector<std::pair<unsigned, Poly>> out;
  Poly rest = f.monic();
  const Poly x = Poly::x(f.field());
  const BigInt Q = f.field().order();
  Poly h = x;
  for (unsigned i = 1; rest.deg() >= 2 * static_cast<long>(i); ++i) {
    h = powmod(h, Q, rest);
    Poly g = gcd(rest, h - x);
    if (g.deg() > 0) {
      rest = exact_div(rest, g);
      h = h % rest;
      out.emplace_back(i, std::move(g));
    }
  }
  if (rest.deg() > 0) out.emplace_back(static_cast<unsigned>(rest.deg()), rest);
  return out;
}

std::vector<Poly> equal_degree_factorization(const Poly& f, unsigned d) {
  if (f.deg() <= 0) return {};
  if (d == 0 || f.deg() % d != 0) throw DomainError("equal_degree_factorization: degree mismatch");
  auto rng = seeded_rng(f, d);
  std::vector<Poly> out;
  edf_rec(f.monic(), d, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

Factorization factorize(const Poly& f) {
  if (f.is_zero()) throw DomainError("factorize: zero polynomial");
  Factorization out{f.leading(), {}};
  for (const auto& [g, m] : squarefree_decomposition(f))
    for (const auto& [d, part] : distinct_degree_factorization(g))
      for (auto& irr : equal_degree_factorization(part, d)) out.factors.emplace_back(std::move(irr), m);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

Poly Factorization::expand() const {
  Poly r = Poly::constant(unit);
  for (const auto& [g, m] : factors) r *= g.pow(m);
  return r;
}

std::vector<FFElem> roots(const Poly& f) {
  if (f.is_zero()) throw DomainError("roots: zero polynomial");
  if (f.deg() <= 0) return {};
  const Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  Poly split = gcd(g, powmod(x, f.field().order(), g) - x);
  std::vector<FFElem> out;
  for (const auto& lin : equal_degree_factorization(split, 1)) out.push_back(-lin.coeff(0));
  std::sort(out.begin(), out.end());
  return out;
}

FFElem any_root(const Poly& f) {
  auto r = roots(f);
  if (r.empty()) throw DomainError("any_root: polynomial has no root in " + f.field().name());
  return r.front();
}

SquarefreeSplit squarefree_split(const Poly& f) {
  if (f.is_zero()) throw DomainError("squarefree_split: zero polynomial");
  const Poly one = one_like(f);
  SquarefreeSplit out{f.leading(), one, one};
  for (const auto& [g, m] : squarefree_decomposition(f)) {
    if (m % 2 == 1) out.squarefree *= g;
    if (m >= 2) out.conductor *= g.pow(m / 2);
  }
  return out;
}

int mobius(const Poly& m) {
  if (m.is_zero() || !m.is_monic()) throw DomainError("mobius: argument must be monic");
  if (m.deg() == 0) return 1;
  if (!is_squarefree(m)) return 0;
  long count = 0;
  for (const auto& [d, part] : distinct_degree_factorization(m)) count += part.deg() / d;
  return count % 2 == 0 ? 1 : -1;
}

void for_each_monic(FieldId f, unsigned d, const std::function<bool(const Poly&)>& fn) {
  const auto& elems = FieldRegistry::instance().elements(f);
  const std::size_t q = elems.size();
  std::vector<std::size_t> idx(d, 0);
  for (;;) {
    std::vector<FFElem> c;
    c.reserve(d + 1);
    for (unsigned i = 0; i < d; ++i) c.push_back(elems[idx[i]]);
    c.push_back(FFElem::one(f));
    if (!fn(Poly(f, std::move(c)))) return;
    // c_{d-1} is the least significant position
    unsigned i = d;
    for (;;) {
      if (i == 0) return;
      --i;
      if (++idx[i] < q) break;
      idx[i] = 0;
    }
  }
}

std::vector<Poly> enumerate_monic_irreducibles(FieldId f, unsigned d) {
  if (d == 0) throw DomainError("enumerate_monic_irreducibles: degree must be positive");
  std::vector<Poly> out;
  for_each_monic(f, d, [&](const Poly& g) {
    if (is_irreducible(g)) out.push_back(g);
    return true;
  });
  return out;
}

BigInt count_monic_irreducibles(const BigInt& q, unsigned d) {
  auto mu = [](unsigned n) {
    int s = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      s = -s;
    }
    return n > 1 ? -s : s;
  };
  BigInt total = 0;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int m = mu(e);
    if (m == 0) continue;
    BigInt t = 1;
    for (unsigned i = 0; i < d / e; ++i) t *= q;
    total += m * t;
  }
  return total / d;
}

}  // namespace drinfeld
