#include <gtest/gtest.h>

#include <random>

#include "drinfeld/errors.hpp"
#include "drinfeld/poly_matrix.hpp"
#include "drinfeld/text.hpp"
#include "oracles.hpp"

namespace drinfeld {
namespace {

FieldId F3() { return field_of_order(3); }
Poly A(const char* s, FieldId f = F3()) { return parse_poly(s, f); }

TEST(PolyText, RoundTrip) {
  for (const char* s : {"T^2+2*T+1", "T", "2", "0", "T^5+T"}) EXPECT_EQ(format_poly(A(s)), s);
  EXPECT_EQ(A("(T+1)^2"), A("T^2+2*T+1"));
  EXPECT_EQ(A(" 2 * T  - 1"), A("2*T+2"));
  EXPECT_THROW(A("T+"), ParseError);
  EXPECT_THROW(A("x+1"), ParseError);
}

TEST(PolyText, NonPrimeCoefficients) {
  const FieldId f9 = field_of_order(9);
  const Poly f = parse_poly("z*T^2+z^3", f9);
  EXPECT_EQ(format_poly(f), "z*T^2+z^3");
}

TEST(Poly, OrderIsDegreeThenCoefficients) {
  EXPECT_LT(A("2"), A("T"));
  EXPECT_LT(A("T"), A("T+1"));
  EXPECT_LT(A("T+2"), A("T^2"));
  EXPECT_LT(A("T^2+T"), A("T^2+1"));
}

TEST(Poly, DivisionIdentity) {
  std::mt19937_64 rng(3);
  const FieldId f = field_of_order(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<std::int64_t> a(rng() % 12), b(1 + rng() % 6);
    for (auto& c : a) c = static_cast<std::int64_t>(rng() % 5);
    for (auto& c : b) c = static_cast<std::int64_t>(rng() % 5);
    b.back() = 1;
    const Poly x = Poly::from_ints(f, a), y = Poly::from_ints(f, b);
    const DivMod d = divmod(x, y);
    EXPECT_EQ(d.quot * y + d.rem, x);
    EXPECT_LT(d.rem.deg(), y.deg());
  }
}

TEST(Poly, ZeroHasNegativeInfiniteDegree) {
  EXPECT_TRUE(Poly(F3()).degree().is_neg_inf());
  EXPECT_EQ(Poly(F3()).degree() + A("T").degree(), Degree::neg_inf());
  EXPECT_THROW(Poly(F3()).degree().value(), DomainError);
  EXPECT_THROW(divmod(A("T"), Poly(F3())), DomainError);
}

TEST(Poly, GcdAndInverse) {
  EXPECT_EQ(gcd(A("T^2+2*T"), A("T^2+T+1")), A("T+2"));
  const XGcd g = xgcd(A("T^3+2"), A("T^2+1"));
  EXPECT_EQ(g.s * A("T^3+2") + g.t * A("T^2+1"), g.g);
  EXPECT_EQ(mulmod(inverse_mod(A("T+1"), A("T^2+1")), A("T+1"), A("T^2+1")), A("1"));
  EXPECT_THROW(inverse_mod(A("T"), A("T^2")), DomainError);
}

TEST(Poly, Crt) {
  const std::vector<Poly> mods = {A("T"), A("T+1"), A("T^2+1")};
  const Poly x = A("T^3+2*T+1");
  std::vector<Poly> res;
  for (const auto& m : mods) res.push_back(x % m);
  EXPECT_EQ(crt(res, mods), x);
}

TEST(Irreducibility, SmallCases) {
  EXPECT_TRUE(is_irreducible(A("T")));
  EXPECT_FALSE(is_irreducible(A("T^2")));
  EXPECT_TRUE(is_irreducible(A("T^2+1")));
  for (const char* s : {"T^2+1"}) {
    const Poly f = A(s);
    for (std::int64_t c = 0; c < 3; ++c) EXPECT_FALSE(f.eval(FFElem::from_int(F3(), c)).is_zero());
  }
}

TEST(Irreducibility, AgreesWithTrialDivision) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const FieldId f = field_of_order(q);
    for (unsigned d = 1; d <= (q <= 3 ? 6u : 4u); ++d)
      for (const auto& g : oracle::all_monic(f, d)) EXPECT_EQ(is_irreducible(g), oracle::irreducible_by_trial(g));
  }
}

TEST(Factorization, Examples) {
  const Factorization a = factorize(A("T^2+T"));
  EXPECT_TRUE(a.unit.is_one());
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0], std::make_pair(A("T"), 1u));
  EXPECT_EQ(a.factors[1], std::make_pair(A("T+1"), 1u));

  const Factorization b = factorize(A("2*T"));
  EXPECT_EQ(b.unit, FFElem::from_int(F3(), 2));
  ASSERT_EQ(b.factors.size(), 1u);
  EXPECT_EQ(b.factors[0].first, A("T"));

  const Factorization c = factorize(parse_poly("y^4+y", F3(), 'y'));
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[0], std::make_pair(A("T"), 1u));
  EXPECT_EQ(c.factors[1], std::make_pair(A("T+1"), 3u));
}

TEST(Factorization, ExpandsBack) {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2, 3, 9, 25}) {
    const FieldId f = field_of_order(q);
    const auto& elems = FieldRegistry::instance().elements(f);
    for (int i = 0; i < 60; ++i) {
      std::vector<FFElem> c;
      for (int k = 0; k < 1 + static_cast<int>(rng() % 10); ++k) c.push_back(elems[rng() % elems.size()]);
      c.push_back(elems[1 + rng() % (elems.size() - 1)]);
      const Poly g(f, c);
      const Factorization fa = factorize(g);
      EXPECT_EQ(fa.expand(), g);
      for (const auto& [h, e] : fa.factors) EXPECT_TRUE(oracle::irreducible_by_trial(h));
    }
  }
}

TEST(SquarefreeSplit, Examples) {
  const auto a = squarefree_split(A("T^3+T^2"));
  EXPECT_EQ(a.conductor, A("T"));
  EXPECT_EQ(a.squarefree, A("T+1"));
  const auto b = squarefree_split(A("T+1"));
  EXPECT_TRUE(b.conductor.is_one());
  EXPECT_EQ(b.squarefree, A("T+1"));
  const auto c = squarefree_split(A("T^6"));
  EXPECT_EQ(c.conductor, A("T^3"));
  EXPECT_TRUE(c.squarefree.is_one());
  const auto d = squarefree_split(A("2*T^5"));
  EXPECT_EQ(d.unit, FFElem::from_int(F3(), 2));
  EXPECT_EQ(d.conductor, A("T^2"));
  EXPECT_EQ(d.squarefree, A("T"));
}

TEST(Mobius, ExamplesAndTrialDivision) {
  EXPECT_EQ(mobius(A("1")), 1);
  EXPECT_EQ(mobius(A("T")), -1);
  EXPECT_EQ(mobius(A("T^2")), 0);
  for (unsigned d = 1; d <= 4; ++d)
    for (const auto& m : oracle::all_monic(F3(), d)) EXPECT_EQ(mobius(m), oracle::mobius_by_trial(m));
}

TEST(Enumeration, Irreducibles) {
  const auto lin = enumerate_monic_irreducibles(F3(), 1);
  EXPECT_EQ(lin, (std::vector<Poly>{A("T"), A("T+1"), A("T+2")}));
  EXPECT_EQ(enumerate_monic_irreducibles(F3(), 2).size(), 3u);
  const FieldId f2 = field_of_order(2);
  // constant term first: T^3+T^2+1 precedes T^3+T+1
  EXPECT_EQ(enumerate_monic_irreducibles(f2, 3), (std::vector<Poly>{A("T^3+T^2+1", f2), A("T^3+T+1", f2)}));
}

TEST(Enumeration, NecklaceCounts) {
  for (std::uint64_t q : {2, 3, 4, 5, 9})
    for (unsigned d = 1; d <= (q <= 3 ? 7u : 4u); ++d) {
      const auto ps = enumerate_monic_irreducibles(field_of_order(q), d);
      EXPECT_EQ(ps.size(), oracle::necklace_count(q, d)) << "q=" << q << " d=" << d;
      EXPECT_EQ(count_monic_irreducibles(BigInt(q), d), oracle::necklace_count(q, d));
      EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    }
}

TEST(SmithForm, Examples) {
  const FieldId f = F3();
  EXPECT_EQ(smith_normal_form(identity_matrix(f, 3)), (std::vector<Poly>(3, A("1"))));
  EXPECT_EQ(smith_normal_form({{A("T"), A("0")}, {A("0"), A("T^2")}}), (std::vector<Poly>{A("T"), A("T^2")}));
  EXPECT_EQ(smith_normal_form({{A("T"), A("1")}, {A("0"), A("T")}}), (std::vector<Poly>{A("1"), A("T^2")}));
  EXPECT_EQ(smith_normal_form({{A("T^2"), A("0")}, {A("0"), A("T")}}), (std::vector<Poly>{A("T"), A("T^2")}));
  EXPECT_THROW(smith_normal_form({{A("T"), A("T")}, {A("1"), A("1")}}), DomainError);
}

TEST(SmithForm, ProductMatchesDeterminant) {
  std::mt19937_64 rng(9);
  const FieldId f = F3();
  for (int it = 0; it < 40; ++it) {
    PolyMatrix m(3, std::vector<Poly>(3, Poly(f)));
    for (auto& row : m)
      for (auto& e : row) {
        std::vector<std::int64_t> c(rng() % 3);
        for (auto& v : c) v = static_cast<std::int64_t>(rng() % 3);
        e = Poly::from_ints(f, c);
      }
    const Poly det = determinant(m);
    if (det.is_zero()) continue;
    const auto d = smith_normal_form(m);
    Poly prod = A("1");
    for (std::size_t i = 0; i < d.size(); ++i) {
      prod *= d[i];
      if (i > 0) EXPECT_TRUE(divides(d[i - 1], d[i]));
    }
    EXPECT_EQ(prod, det.monic());
  }
}

TEST(RationalCanonicalForm, Examples) {
  const Poly l = A("T+1");
  const ResidueField k(l);
  const PolyMatrix scalar = {{A("2"), A("0")}, {A("0"), A("2")}};
  EXPECT_EQ(rational_canonical_form(scalar, k).form, scalar);

  // companion of x^2 + x + 2T, and 2T = 2 mod T+1
  const PolyMatrix comp = {{A("0"), A("1")}, {A("1"), A("2")}};
  const auto rc = rational_canonical_form(comp, k);
  EXPECT_EQ(rc.invariant_factors.size(), 1u);
  EXPECT_EQ(rational_canonical_form(rc.form, k).form, rc.form);

  const PolyMatrix unip = {{A("1"), A("0")}, {A("2"), A("1")}};
  const auto ru = rational_canonical_form(unip, k);
  ASSERT_EQ(ru.invariant_factors.size(), 1u);
  const FieldId fk = k.field();
  const Poly xm1(fk, {-FFElem::one(fk), FFElem::one(fk)});
  EXPECT_EQ(ru.invariant_factors[0], xm1 * xm1);
}

TEST(RationalCanonicalForm, InvariantUnderConjugation) {
  const ResidueField k(A("T^2+1"));
  const PolyMatrix m = {{A("T"), A("1"), A("0")}, {A("0"), A("T"), A("0")}, {A("1"), A("2"), A("T+1")}};
  const PolyMatrix g = {{A("1"), A("T"), A("0")}, {A("0"), A("1"), A("2")}, {A("1"), A("0"), A("1")}};
  const Poly l = k.modulus();
  const Poly det = determinant(g) % l;
  ASSERT_FALSE(det.is_zero());
  // g^{-1} = adj(g) / det(g) mod l
  PolyMatrix adj(3, std::vector<Poly>(3, Poly(F3())));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PolyMatrix minor;
      for (int r = 0; r < 3; ++r) {
        if (r == j) continue;
        std::vector<Poly> row;
        for (int c = 0; c < 3; ++c)
          if (c != i) row.push_back(g[r][c]);
        minor.push_back(row);
      }
      const Poly cof = determinant(minor);
      adj[i][j] = (i + j) % 2 ? -cof : cof;
    }
  const Poly dinv = inverse_mod(det, l);
  for (auto& row : adj)
    for (auto& e : row) e = mulmod(e, dinv, l);
  const PolyMatrix conj = matrix_mod(matrix_mul(matrix_mul(g, m), adj), l);
  EXPECT_EQ(rational_canonical_form(conj, k).form, rational_canonical_form(m, k).form);
}

}  // namespace
}  // namespace drinfeld
