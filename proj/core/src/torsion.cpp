#include "drinfeld/torsion.hpp"

#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"
#include "echelon_span.hpp"

namespace drinfeld {

using detail::EchelonSpan;

namespace {

std::vector<std::uint32_t> to_vec(const FFElem& x) { return {x.coords().begin(), x.coords().end()}; }

// Evaluates a twisted polynomial whose coefficients already live in x's field.
FFElem eval_embedded(const std::vector<FFElem>& c, const FFElem& x, unsigned q_degree) {
  FFElem acc = FFElem::zero(x.field()), xp = x;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) xp = xp.frobenius(q_degree);
    if (!c[i].is_zero()) acc += c[i] * xp;
  }
  return acc;
}

std::vector<FFElem> embed_all(const SkewPolyF& f, FieldId L) {
  std::vector<FFElem> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(embed(c, L));
  return out;
}

}  // namespace

unsigned torsion_splitting_degree(const ReducedModule& m, const Poly& a, const TorsionOptions& opt) {
  if (a.deg() < 1) throw DomainError("torsion level must be nonconstant");
  const SkewPolyF psi_a = m.psibar(a);
  const SkewPolyF frob = m.tau(m.n());
  const SkewPolyF one = SkewPolyF::constant(m.ring(), FFElem::one(m.ring().field));
  SkewPolyF r = one;
  for (unsigned s = 1; s <= opt.max_splitting_degree; ++s) {
    r = skew_right_divmod(frob * r, psi_a).rem;
    if (r == one) return s;
  }
  throw ResourceError("a-torsion splitting degree exceeds " + std::to_string(opt.max_splitting_degree));
}

TorsionBasis torsion_basis(const ReducedModule& m, const Poly& a, const TorsionOptions& opt) {
  if (a.deg() < 1) throw DomainError("torsion level must be nonconstant");
  if (!gcd(a, m.prime()).is_one())
    throw DomainError("torsion level " + format_poly(a) + " is not coprime to " + format_poly(m.prime()));
  const FieldId fq = m.source().base();
  const unsigned e = fq.degree();
  const unsigned n = m.n();
  const unsigned r = m.rank();
  const unsigned da = static_cast<unsigned>(a.deg());
  const std::uint32_t p = fq.characteristic();

  TorsionBasis out;
  out.modulus = a;
  out.splitting_degree = torsion_splitting_degree(m, a, opt);
  const unsigned N = e * n * out.splitting_degree;
  const FieldId L = FieldRegistry::instance().field(p, N);
  out.splitting_extension = L;

  const std::vector<FFElem> psi_a = embed_all(m.psibar(a), L);
  const std::vector<FFElem> psi_t = embed_all(m.psibar_T(), L);

  MatrixFp K(p, N, N);
  for (unsigned j = 0; j < N; ++j) {
    Coords c(N, 0);
    c[j] = 1;
    K.set_column(j, to_vec(eval_embedded(psi_a, FFElem(L, std::move(c)), e)));
  }
  const auto kernel = null_space(K);
  const std::size_t D = static_cast<std::size_t>(e) * r * da;
  if (kernel.size() != D)
    throw VerificationError("a-torsion has F_p-dimension " + std::to_string(kernel.size()) + ", expected " +
                            std::to_string(D));
  std::vector<FFElem> w;
  for (const auto& v : kernel) w.emplace_back(L, Coords(v.begin(), v.end()));

  std::vector<FFElem> zpow;  // power basis of F_q inside L
  {
    const FFElem z = embed(FFElem::gen(fq), L);
    FFElem t = FFElem::one(L);
    for (unsigned i = 0; i < e; ++i) {
      zpow.push_back(t);
      t *= z;
    }
  }
  // z^i psibar_{T^j}(v) for j < deg a, i < e, in column order j*e + i
  auto orbit = [&](const FFElem& v) {
    std::vector<FFElem> out_v;
    FFElem t = v;
    for (unsigned j = 0; j < da; ++j) {
      if (j > 0) t = eval_embedded(psi_t, t, e);
      for (unsigned i = 0; i < e; ++i) out_v.push_back(zpow[i] * t);
    }
    return out_v;
  };

  // Candidates in lexicographic order of their kernel coordinates; accept
  // one when its cyclic submodule is free and meets the span so far trivially.
  const PrimeField& fp = fq.prime_field();
  EchelonSpan span(fp);
  std::vector<std::uint32_t> digits(D, 0);
  auto advance = [&]() {
    for (std::size_t i = D; i-- > 0;) {
      if (++digits[i] < p) return true;
      digits[i] = 0;
    }
    return false;
  };
  while (out.generators.size() < r) {
    if (!advance()) throw InconclusiveBasisError("no free A/aA-basis found in the a-torsion");
    FFElem v = FFElem::zero(L);
    for (std::size_t i = 0; i < D; ++i)
      if (digits[i] != 0) v += w[i].scaled(digits[i]);
    EchelonSpan trial = span;
    bool ok = true;
    for (const auto& x : orbit(v))
      if (!trial.insert(to_vec(x))) {
        ok = false;
        break;
      }
    if (!ok) continue;
    span = std::move(trial);
    out.generators.push_back(v);
  }

  MatrixFp E(p, N, D);
  for (unsigned k = 0; k < r; ++k) {
    const auto orb = orbit(out.generators[k]);
    for (std::size_t c = 0; c < orb.size(); ++c) E.set_column(k * e * da + c, to_vec(orb[c]));
  }
  const LinearSolver solver(E);
  out.frobenius_matrix.assign(r, std::vector<Poly>(r, Poly(fq)));
  for (unsigned k = 0; k < r; ++k) {
    const FFElem y = out.generators[k].frobenius(static_cast<long>(e) * n);
    const auto sol = solver.solve(y.coords());
    if (!sol) throw VerificationError("Frobenius image left the a-torsion");
    for (unsigned row = 0; row < r; ++row) {
      std::vector<FFElem> coeffs;
      for (unsigned j = 0; j < da; ++j) {
        Coords cz(e);
        for (unsigned i = 0; i < e; ++i) cz[i] = (*sol)[row * e * da + j * e + i];
        coeffs.emplace_back(fq, std::move(cz));
      }
      out.frobenius_matrix[row][k] = Poly(fq, std::move(coeffs));
    }
  }
  return out;
}

std::vector<Poly> module_structure_oracle(const ReducedModule& m) {
  const ResidueField& k = m.residue();
  const unsigned n = k.degree();
  const FieldId fq = k.base();
  FieldMatrix M(n, std::vector<FFElem>(n, FFElem::zero(fq)));
  FFElem t = FFElem::one(k.field());
  for (unsigned j = 0; j < n; ++j) {
    const Poly img = k.lift(skew_eval(m.psibar_T(), t));
    for (unsigned i = 0; i < n; ++i) M[i][j] = img.coeff(i);
    t *= k.theta();
  }
  return rational_canonical_form(M).invariant_factors;
}

}  // namespace drinfeld
