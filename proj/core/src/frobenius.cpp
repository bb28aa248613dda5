#include "drinfeld/frobenius.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"
#include "echelon_span.hpp"

namespace drinfeld {

using detail::EchelonSpan;

namespace {

Poly one_in(FieldId f) { return Poly::constant(FFElem::one(f)); }

void require_rank2(const ReducedModule& m) {
  if (m.rank() != 2) throw DomainError("rank 2 required, module has rank " + std::to_string(m.rank()));
}

void require_odd_q(FieldId fq) {
  if (fq.characteristic() == 2) throw DomainError("odd q required");
}

// F_p-coordinates of a twisted polynomial, coefficient k at offset k * width.
std::vector<std::uint32_t> flatten(const SkewPolyF& f, std::size_t width, std::size_t max_deg) {
  std::vector<std::uint32_t> v((max_deg + 1) * width, 0);
  if (f.degree() > static_cast<long>(max_deg)) throw VerificationError("twisted polynomial exceeds its window");
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const auto& c = f.coeffs()[k].coords();
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(k * width));
  }
  return v;
}

SkewPolyF unflatten(const FieldCoeffs& R, const std::vector<std::uint32_t>& v, std::size_t width) {
  std::vector<FFElem> c;
  for (std::size_t k = 0; k * width < v.size(); ++k)
    c.emplace_back(R.field, Coords(v.begin() + static_cast<std::ptrdiff_t>(k * width),
                                   v.begin() + static_cast<std::ptrdiff_t>((k + 1) * width)));
  return SkewPolyF(R, std::move(c));
}

// Power basis 1, z, ..., z^{e-1} of F_q inside `L`.
std::vector<FFElem> base_power_basis(FieldId fq, FieldId L) {
  std::vector<FFElem> out;
  const FFElem z = embed(FFElem::gen(fq), L);
  FFElem t = FFElem::one(L);
  for (unsigned i = 0; i < fq.degree(); ++i) {
    out.push_back(t);
    t *= z;
  }
  return out;
}

}  // namespace

std::vector<Poly> WeilPolynomial::full() const {
  std::vector<Poly> out = coeffs;
  out.push_back(one_in(prime.field()));
  return out;
}

std::string WeilPolynomial::str() const { return format_weil(coeffs); }

FFElem u_invariant(const ReducedModule& m) {
  require_rank2(m);
  const ResidueField& k = m.residue();
  const FFElem g2 = k.reduce(m.source().g(2));
  if (g2.is_zero()) throw BadReductionError("g_2 vanishes mod " + format_poly(m.prime()));
  FieldTower tower(k.base());
  FFElem u = tower.norm_to_base(g2).inverse();
  return m.n() % 2 == 1 ? -u : u;
}

WeilPolynomial weil_rank2(const ReducedModule& m) {
  require_rank2(m);
  const Poly& p = m.prime();
  const FieldId fq = p.field();
  const unsigned n = m.n();
  const BigInt q = fq.order();
  const Poly g1 = m.source().g(1) % p;
  const Poly g2 = m.source().g(2) % p;
  const Poly T = Poly::x(fq) % p;

  // g^{q^k} mod p for k = 0 .. n-1, and [k] = T^{q^k} - T
  std::vector<Poly> g1q{g1}, g2q{g2}, tq{T};
  for (unsigned k = 1; k < n; ++k) {
    g1q.push_back(powmod(g1q.back(), q, p));
    g2q.push_back(powmod(g2q.back(), q, p));
    tq.push_back(powmod(tq.back(), q, p));
  }
  std::vector<Poly> s{one_in(fq), g1};
  for (unsigned k = 2; k <= n; ++k) {
    const Poly bracket = tq[k - 1] - T;
    s.push_back((-(mulmod(mulmod(bracket, s[k - 2], p), g2q[k - 2], p)) + mulmod(s[k - 1], g1q[k - 1], p)) % p);
  }
  const FFElem u = u_invariant(m);
  const Poly a = (s[n] * (-u)) % p;
  if (2 * a.deg() > static_cast<long>(n))
    throw VerificationError("deg a_p = " + std::to_string(a.deg()) + " exceeds deg(p)/2 at " + format_poly(p));
  return WeilPolynomial{p, {p * u, a}, u};
}

bool weil_identity_holds(const ReducedModule& m, const WeilPolynomial& w) {
  const unsigned n = m.n();
  SkewPolyF acc = m.tau(static_cast<std::size_t>(n) * w.rank());
  for (unsigned i = 0; i < w.rank(); ++i) {
    if (w.coeffs[i].is_zero()) continue;
    acc = acc + m.psibar(w.coeffs[i]) * m.tau(static_cast<std::size_t>(n) * i);
  }
  return acc.is_zero();
}

std::vector<Poly> auxiliary_moduli(const Poly& p) {
  const FieldId fq = p.field();
  std::vector<Poly> linear;
  for_each_monic(fq, 1, [&](const Poly& l) {
    if (!(l == p)) linear.push_back(l);
    return true;
  });
  const long need = p.deg() + 1;
  std::vector<unsigned> exps(linear.size(), 0);
  long total = 0;
  for (std::size_t i = 0; total < need; i = (i + 1) % linear.size(), ++total) ++exps[i];
  std::vector<Poly> out;
  for (std::size_t i = 0; i < linear.size(); ++i)
    if (exps[i] > 0) out.push_back(linear[i].pow(exps[i]));
  return out;
}

WeilPolynomial weil_general(const ReducedModule& m, const WeilGeneralOptions& opt) {
  const Poly& p = m.prime();
  const FieldId fq = p.field();
  const unsigned r = m.rank();
  const std::vector<Poly> moduli = auxiliary_moduli(p);
  long total = 0;
  for (const auto& l : moduli) total += l.deg();
  if (total < p.deg() + 1) throw ConfigurationError("not enough auxiliary moduli coprime to " + format_poly(p));

  std::vector<std::vector<Poly>> residues(r);
  for (const auto& M : moduli) {
    const TorsionBasis tb = torsion_basis(m, M, opt.torsion);
    const std::vector<Poly> cp = charpoly_mod(tb.frobenius_matrix, M);
    for (unsigned i = 0; i < r; ++i) residues[i].push_back(cp[i]);
  }
  WeilPolynomial w{p, {}, FFElem::zero(fq)};
  for (unsigned i = 0; i < r; ++i) w.coeffs.push_back(crt(residues[i], moduli));
  const DivMod dm = divmod(w.coeffs[0], p);
  if (!dm.rem.is_zero() || dm.quot.deg() != 0)
    throw VerificationError("constant term " + format_poly(w.coeffs[0]) + " is not a unit times " + format_poly(p));
  w.unit = dm.quot.coeff(0);
  if (!weil_identity_holds(m, w)) throw VerificationError("Weil identity fails at " + format_poly(p));
  return w;
}

bool bp_membership(const ReducedModule& m, const Poly& a_p, const Poly& divisor) {
  const FieldId L = m.ring().field;
  const SkewPolyF two_pi = m.tau(m.n()).scaled(FFElem::from_int(L, 2));
  const SkewPolyF f = two_pi + m.psibar(a_p);
  return right_divides(m.psibar(divisor), f);
}

Rank2Invariants rank2_invariants(const ReducedModule& m) {
  require_rank2(m);
  const FieldId fq = m.source().base();
  require_odd_q(fq);
  const Poly& p = m.prime();
  Rank2Invariants out;
  out.weil = weil_rank2(m);
  out.a_p = out.weil.coeffs[1];
  out.u_p = out.weil.unit;
  out.d = out.a_p * out.a_p - p * (out.u_p * FFElem::from_int(fq, 4));
  out.supersingular = out.a_p.is_zero();

  const SquarefreeSplit split = squarefree_split(out.d);
  Poly b = one_in(fq);
  if (!split.conductor.is_one()) {
    // per prime factor, the largest passing exponent; membership is
    // monotone along divisors, so the search stops at the first failure
    for (const auto& [l, mult] : factorize(split.conductor).factors) {
      Poly acc = b;
      for (unsigned k = 1; k <= mult; ++k) {
        const Poly trial = b * l.pow(k);
        if (!bp_membership(m, out.a_p, trial)) break;
        acc = trial;
      }
      b = acc;
    }
  }
  out.b_p = b;
  out.delta_p = exact_div(out.d, b * b);
  out.delta_monic = out.delta_p.monic();
  return out;
}

std::vector<Poly> EndLattice::multiply(const std::vector<Poly>& x, const std::vector<Poly>& y) const {
  const std::size_t r = basis.size();
  const FieldId fq = x.at(0).field();
  std::vector<Poly> z(r, Poly(fq));
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (y[j].is_zero()) continue;
      const Poly c = x[i] * y[j];
      for (std::size_t k = 0; k < r; ++k) z[k] += c * mult[i][j][k];
    }
  }
  return z;
}

namespace {

// Coordinates in an A-basis of the centralizer, by linear algebra against
// the F_p-basis z^k psibar_{T^j} b_i of the elements up to a τ-degree bound.
class LatticeCoordinates {
 public:
  LatticeCoordinates(const ReducedModule& m, const std::vector<SkewPolyF>& basis, std::size_t max_deg)
      : fq_(m.source().base()), width_(m.ring().field.degree()), max_deg_(max_deg), r_(basis.size()) {
    const auto zq = base_power_basis(fq_, m.ring().field);
    std::vector<std::vector<std::uint32_t>> cols;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      SkewPolyF t = basis[i];
      for (unsigned j = 0; static_cast<std::size_t>(t.degree()) <= max_deg; ++j) {
        for (unsigned k = 0; k < zq.size(); ++k) {
          cols.push_back(flatten(t.scaled(zq[k]), width_, max_deg));
          tags_.push_back({i, j, k});
        }
        t = m.psibar_T() * t;
      }
    }
    MatrixFp M(fq_.characteristic(), (max_deg + 1) * width_, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) M.set_column(c, cols[c]);
    if (rank(M) != cols.size()) throw VerificationError("endomorphism basis is not reduced");
    solver_.emplace(M);
  }

  std::vector<Poly> coords(const SkewPolyF& f) const {
    if (f.degree() > static_cast<long>(max_deg_)) throw VerificationError("element exceeds the coordinate window");
    const auto sol = solver_->solve(flatten(f, width_, max_deg_));
    if (!sol) throw VerificationError("element is not in the A-span of the endomorphism basis");
    const unsigned e = fq_.degree();
    std::vector<std::vector<Coords>> c(r_);
    for (std::size_t t = 0; t < tags_.size(); ++t) {
      const auto& tag = tags_[t];
      auto& ci = c[tag.gen];
      if (ci.size() <= tag.j) ci.resize(tag.j + 1, Coords(e, 0));
      ci[tag.j][tag.k] = (*sol)[t];
    }
    std::vector<Poly> out;
    for (auto& ci : c) {
      std::vector<FFElem> coeffs;
      for (auto& x : ci) coeffs.emplace_back(fq_, std::move(x));
      out.emplace_back(fq_, std::move(coeffs));
    }
    return out;
  }

 private:
  struct Tag {
    std::size_t gen;
    unsigned j;
    unsigned k;
  };
  FieldId fq_;
  std::size_t width_;
  std::size_t max_deg_;
  std::size_t r_;
  std::vector<Tag> tags_;
  std::optional<LinearSolver> solver_;
};

}  // namespace

EndLattice end_lattice(const ReducedModule& m) {
  const FieldCoeffs R = m.ring();
  const FieldId L = R.field;
  const FieldId fq = m.source().base();
  const std::uint32_t p = L.characteristic();
  const std::size_t width = L.degree();
  const unsigned r = m.rank();
  const unsigned n = m.n();
  const unsigned start = n + 2 * r;
  const unsigned cap = 4 * (n + r * r);
  const std::size_t rows = (cap + r + 1) * width;
  const auto zq = base_power_basis(fq, L);
  const SkewPolyF& pt = m.psibar_T();

  // commutator e psibar_T - psibar_T e for e = beta tau^k, beta running over
  // the F_p power basis of F_p
  std::vector<std::vector<std::uint32_t>> cols;
  auto ensure_cols = [&](unsigned d) {
    while (cols.size() < (d + 1) * width) {
      const std::size_t k = cols.size() / width, b = cols.size() % width;
      Coords c(width, 0);
      c[b] = 1;
      const SkewPolyF e = SkewPolyF::monomial(R, FFElem(L, std::move(c)), k);
      auto v = flatten(e * pt - pt * e, width, cap + r);
      v.resize(rows, 0);
      cols.push_back(std::move(v));
    }
  };

  EchelonSpan span(L.prime_field());
  std::vector<SkewPolyF> gens;
  std::vector<SkewPolyF> frontier;  // psibar_{T^j} b_i at the largest j so far
  auto add_scaled = [&](const SkewPolyF& f) {
    for (const auto& z : zq)
      if (!span.insert(flatten(f.scaled(z), width, cap)))
        throw InconclusiveBasisError("endomorphism span is not reduced");
  };

  unsigned last_new = 0;
  for (unsigned d = 0; d <= cap; ++d) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const long dg = gens[i].degree();
      if (static_cast<long>(d) > dg && (static_cast<long>(d) - dg) % r == 0) {
        frontier[i] = pt * frontier[i];
        add_scaled(frontier[i]);
      }
    }
    if (d == 0) {
      const SkewPolyF one = SkewPolyF::constant(R, FFElem::one(L));
      gens.push_back(one);
      frontier.push_back(one);
      add_scaled(one);
    }
    ensure_cols(d);
    MatrixFp M(p, (d + r + 1) * width, (d + 1) * width);
    for (std::size_t c = 0; c < (d + 1) * width; ++c)
      for (std::size_t i = 0; i < M.rows(); ++i) M(i, c) = cols[c][i];
    const auto W = null_space(M);
    for (const auto& w : W) {
      std::vector<std::uint32_t> v = w;
      v.resize((cap + 1) * width, 0);
      EchelonSpan trial = span;
      if (!trial.insert(v)) continue;
      const SkewPolyF b = unflatten(R, w, width);
      gens.push_back(b);
      frontier.push_back(b);
      add_scaled(b);
      last_new = d;
      if (gens.size() > r) throw InconclusiveBasisError("centralizer has more than r independent generators");
    }
    if (span.dim() != W.size()) throw InconclusiveBasisError("centralizer span mismatch at degree " + std::to_string(d));
    if (gens.size() == r && d >= start && d >= last_new + 2 * r) {
      EndLattice out;
      out.basis = gens;
      out.window = d;
      long maxdeg = 0;
      for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
      const std::size_t cw = std::max<std::size_t>(n, static_cast<std::size_t>(2 * maxdeg));
      const LatticeCoordinates lc(m, gens, cw);
      out.mult.assign(r, std::vector<std::vector<Poly>>(r));
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < r; ++j) out.mult[i][j] = lc.coords(gens[i] * gens[j]);
      out.pi_coords = lc.coords(m.tau(n));
      return out;
    }
  }
  throw InconclusiveBasisError("endomorphism basis not found within tau-degree " + std::to_string(cap));
}

std::vector<Poly> invariant_factors(const EndLattice& lattice) {
  const std::size_t r = lattice.rank();
  const FieldId fq = lattice.pi_coords.at(0).field();
  std::vector<Poly> x(r, Poly(fq));
  x[0] = one_in(fq);
  PolyMatrix M;
  for (std::size_t k = 0; k < r; ++k) {
    if (k > 0) x = lattice.multiply(x, lattice.pi_coords);
    M.push_back(x);
  }
  std::vector<Poly> snf = smith_normal_form(M);
  if (!snf.front().is_one()) throw VerificationError("1 is not primitive in the endomorphism lattice");
  return std::vector<Poly>(snf.begin() + 1, snf.end());
}

std::vector<Poly> invariant_factors(const ReducedModule& m) { return invariant_factors(end_lattice(m)); }

Poly resultant(const std::vector<Poly>& f, const std::vector<Poly>& g) {
  if (f.empty() || g.empty()) throw DomainError("resultant of an empty polynomial");
  const std::size_t df = f.size() - 1, dg = g.size() - 1;
  const FieldId fq = f.back().field();
  const std::size_t N = df + dg;
  if (N == 0) return one_in(fq);
  PolyMatrix S(N, std::vector<Poly>(N, Poly(fq)));
  // rows of f shifted dg times, then rows of g shifted df times; high degree first
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j <= df; ++j) S[i][i + j] = f[df - j];
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t j = 0; j <= dg; ++j) S[dg + i][i + j] = g[dg - j];
  return determinant(S);
}

Poly discriminant(const WeilPolynomial& w) {
  const std::vector<Poly> P = w.full();
  std::vector<Poly> dP;
  for (std::size_t i = 1; i < P.size(); ++i) dP.push_back(P[i] * FFElem::from_int(P[i].field(), static_cast<std::int64_t>(i)));
  while (!dP.empty() && dP.back().is_zero()) dP.pop_back();
  if (dP.size() != P.size() - 1) throw DomainError("derivative of P drops degree; gcd(r, q) must be 1");
  const Poly d = resultant(P, dP);
  return d.is_zero() ? d : d.monic();
}

DiscCheck disc_check(const ReducedModule& m, const WeilPolynomial& w, const EndLattice& lattice) {
  const unsigned r = m.rank();
  const FieldId fq = m.source().base();
  if (r % fq.characteristic() == 0) throw DomainError("disc_check requires gcd(r, q) = 1");
  DiscCheck out;
  out.disc_P = discriminant(w);
  std::vector<Poly> tr(r, Poly(fq));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j) tr[i] += lattice.mult[i][j][j];
  PolyMatrix G(r, std::vector<Poly>(r, Poly(fq)));
  for (unsigned i = 0; i < r; ++i)
    for (unsigned j = 0; j < r; ++j)
      for (unsigned k = 0; k < r; ++k) G[i][j] += lattice.mult[i][j][k] * tr[k];
  const Poly dE = determinant(G);
  out.disc_E = dE.is_zero() ? dE : dE.monic();
  out.b = invariant_factors(lattice);
  Poly prod = one_in(fq);
  for (const auto& b : out.b) prod *= b;
  out.holds = !out.disc_P.is_zero() && out.disc_P == (out.disc_E * prod * prod).monic();
  return out;
}

DiscCheck disc_check(const ReducedModule& m) {
  const WeilPolynomial w = m.rank() == 2 ? weil_rank2(m) : weil_general(m);
  return disc_check(m, w, end_lattice(m));
}

}  // namespace drinfeld
