#include <gtest/gtest.h>

#include "drinfeld/division_fields.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"
#include "oracles.hpp"

namespace drinfeld {
namespace {

FieldId F3() { return field_of_order(3); }
Poly A(const char* s, FieldId f = F3()) { return parse_poly(s, f); }
DrinfeldModule M(const char* s, std::uint64_t q = 3) { return DrinfeldModule::parse(s, field_of_order(q)); }
ReducedModule R(const char* psi, const char* p, std::uint64_t q = 3) {
  return reduce_at(M(psi, q), parse_poly(p, field_of_order(q)));
}

TEST(ClassMatrix, Example) {
  const ReducedModule m = R("T+1*t+1*t^2", "T");
  const FrobeniusClassMatrix c = frobenius_class_matrix(m, A("T+1"));
  EXPECT_EQ(format_matrix(c.entries), "[[1,0],[2,1]]");
  // trace -a_p and determinant u_p p, both mod a
  const Poly a = A("T+1");
  EXPECT_EQ((c.entries[0][0] + c.entries[1][1]) % a, A("2"));
  EXPECT_EQ(determinant(c.entries) % a, A("1"));
  EXPECT_THROW(frobenius_class_matrix(m, A("T")), DomainError);
  EXPECT_THROW(frobenius_class_matrix(m, A("2")), DomainError);
}

TEST(ClassMatrix, CharpolyIsTheWeilPolynomial) {
  const DrinfeldModule psi = M("T+T*t+(T^2+1)*t^2");
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& p : enumerate_monic_irreducibles(F3(), d)) {
      if (!good_reduction_at(psi, p)) continue;
      const ReducedModule m = reduce_at(psi, p);
      const Rank2Invariants inv = rank2_invariants(m);
      for (const char* l : {"T+1", "T^2+1", "T^2+T+2"}) {
        const Poly a = A(l);
        if (!gcd(a, p).is_one()) continue;
        const auto cp = charpoly_mod(frobenius_class_matrix(inv, a).entries, a);
        EXPECT_EQ(cp[1], inv.weil.coeffs[1] % a);
        EXPECT_EQ(cp[0], inv.weil.coeffs[0] % a);
      }
    }
}

TEST(ClassMatrix, MatchesTorsionUpToConjugacy) {
  const DrinfeldModule psi = M("T+1*t^2");
  for (unsigned d = 1; d <= 2; ++d)
    for (const auto& p : enumerate_monic_irreducibles(F3(), d)) {
      const ReducedModule m = reduce_at(psi, p);
      for (const char* l : {"T", "T+2", "T^2+T+2"}) {
        const Poly ll = A(l);
        if (ll == p) continue;
        const ResidueField k(ll);
        EXPECT_EQ(rational_canonical_form(frobenius_class_matrix(m, ll).entries, k).form,
                  rational_canonical_form(torsion_basis(m, ll).frobenius_matrix, k).form);
      }
    }
}

TEST(SplitsCompletely, Example) {
  const ReducedModule m = R("T+1*t+1*t^2", "T");
  EXPECT_FALSE(splits_completely(m, A("T+1")));
}

TEST(SplitsCompletely, IffTorsionMatrixIsIdentity) {
  const DrinfeldModule psi = M("T+1*t^2");
  std::size_t hits = 0;
  for (unsigned d = 1; d <= 4; ++d)
    for (const auto& p : enumerate_monic_irreducibles(F3(), d))
      for (const char* l : {"T", "T+1", "T+2"}) {
        const Poly a = A(l);
        if (a == p) continue;
        const ReducedModule m = reduce_at(psi, p);
        const bool split = splits_completely(m, a);
        const PolyMatrix fm = torsion_basis(m, a).frobenius_matrix;
        const bool identity = oracle::is_scalar(fm) && fm[0][0].is_one();
        EXPECT_EQ(split, identity) << format_poly(p) << " mod " << l;
        if (identity) {
          EXPECT_EQ(frobenius_class_matrix(m, a).entries, identity_matrix(F3(), 2));
          ++hits;
        }
      }
  EXPECT_GT(hits, 0u);
}

TEST(ModuleStructure, Example) {
  const ModuleStructure s = module_structure(R("T+1*t+1*t^2", "T"));
  EXPECT_TRUE(s.d1.is_one());
  EXPECT_EQ(s.d2, A("T+1"));
  EXPECT_EQ(s.discarded_unit, FFElem::from_int(F3(), 2));
  EXPECT_EQ(s.nonunit(), (std::vector<Poly>{A("T+1")}));
}

TEST(ModuleStructure, MatchesOracle) {
  for (const char* psi : {"T+1*t+1*t^2", "T+1*t^2", "T+T*t+(T^2+1)*t^2"})
    for (unsigned d = 1; d <= 4; ++d)
      for (const auto& p : enumerate_monic_irreducibles(F3(), d)) {
        if (!good_reduction_at(M(psi), p)) continue;
        const ReducedModule m = reduce_at(M(psi), p);
        const Rank2Invariants inv = rank2_invariants(m);
        const ModuleStructure s = module_structure(inv);
        EXPECT_EQ(s.nonunit(), module_structure_oracle(m)) << psi << " at " << format_poly(p);
        if (inv.b_p.is_one()) {
          EXPECT_TRUE(s.d1.is_one());
        }
      }
}

TEST(JmSplits, TrivialConductor) {
  const ReducedModule m = R("T+1*t+1*t^2", "T");
  for (const char* l : {"T+1", "T+2", "T^2+1"}) EXPECT_FALSE(jm_splits(m, A(l)));
  EXPECT_THROW(jm_splits(m, A("T")), DomainError);
}

TEST(JmSplits, IffTorsionMatrixScalar) {
  const DrinfeldModule psi = M("T+1*t^2");
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& p : enumerate_monic_irreducibles(F3(), d)) {
      const ReducedModule m = reduce_at(psi, p);
      for (const char* l : {"T", "T+1", "T+2"}) {
        const Poly a = A(l);
        if (a == p) continue;
        EXPECT_EQ(jm_splits(m, a), oracle::is_scalar(torsion_basis(m, a).frobenius_matrix));
      }
    }
}

TEST(Abhyankar, Polynomials) {
  const AbhyankarPolynomial f = abhyankar_poly(M("T+1*t+1*t^2"));
  ASSERT_EQ(f.degree(), 4u);
  EXPECT_EQ(f.coeffs[0], A("T"));
  EXPECT_EQ(f.coeffs[1], A("1"));
  EXPECT_TRUE(f.coeffs[2].is_zero() && f.coeffs[3].is_zero());
  EXPECT_EQ(f.coeffs[4], A("1"));

  const FieldId f5 = field_of_order(5);
  const AbhyankarPolynomial g = abhyankar_poly(M("T+1*t+(T^2+3)*t^2", 5));
  ASSERT_EQ(g.degree(), 6u);
  EXPECT_EQ(g.coeffs[6], parse_poly("T^2+3", f5));
  EXPECT_EQ(g.coeffs[1], parse_poly("1", f5));
  EXPECT_EQ(g.coeffs[0], parse_poly("T", f5));
}

TEST(Abhyankar, NoRootModTPlusOne) {
  const ReducedModule m = R("T+1*t+1*t^2", "T+1");
  const AbhyankarSplit s = abhyankar_splits_mod(m);
  EXPECT_FALSE(s.splits);
  EXPECT_TRUE(s.law_holds);
  EXPECT_THROW(abhyankar_splits_mod(R("T+1*t+1*t^2", "T")), DomainError);
}

TEST(Abhyankar, LawAndWitness) {
  const DrinfeldModule psi = M("T+1*t+1*t^2", 5);
  const FieldId f5 = psi.base();
  const Poly T = Poly::x(f5);
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& p : enumerate_monic_irreducibles(f5, d)) {
      if (p == T) continue;
      const AbhyankarSplit s = abhyankar_splits_mod(reduce_at(psi, p));
      EXPECT_TRUE(s.law_holds) << format_poly(p);
      EXPECT_FALSE(s.splits) << format_poly(p);
    }
  // the first split prime appears in degree 5
  const Poly p = parse_poly("T^5+T^3+4*T^2+1", f5);
  const AbhyankarSplit s = abhyankar_splits_mod(reduce_at(psi, p));
  EXPECT_TRUE(s.splits);
  EXPECT_TRUE(s.law_holds);
  EXPECT_TRUE(s.disc_condition);
  ASSERT_TRUE(s.u && s.alpha && s.beta);
  EXPECT_EQ(*s.alpha * *s.alpha * *s.u + T * T * *s.beta, p);
}

TEST(Abhyankar, RankThreeLaw) {
  const DrinfeldModule psi = M("T+1*t+1*t^3", 2);
  const Poly T = Poly::x(psi.base());
  for (unsigned d = 1; d <= 4; ++d)
    for (const auto& p : enumerate_monic_irreducibles(psi.base(), d)) {
      if (p == T) continue;
      EXPECT_TRUE(abhyankar_splits_mod(reduce_at(psi, p)).law_holds) << format_poly(p);
    }
}

}  // namespace
}  // namespace drinfeld
