#include <gtest/gtest.h>

#include <random>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/text.hpp"
#include "oracles.hpp"

namespace drinfeld {
namespace {

struct F9 {
  FieldId f = field_of_order(9);
  FieldCoeffs ring{f, 2};
  FFElem z = FieldRegistry::instance().primitive_element(f);
  SkewPolyF tau(std::size_t k = 1) const { return SkewPolyF::tau(ring, k); }
  SkewPolyF c(const FFElem& x) const { return SkewPolyF::constant(ring, x); }
};

TEST(SkewMul, CommutationRule) {
  const F9 s;
  EXPECT_EQ(s.tau() * s.c(s.z), SkewPolyF::monomial(s.ring, s.z.pow(9), 1));
  // q = 9 here; over F_3 coefficients the twist is the cube
  const FieldCoeffs r3{s.f, 1};
  EXPECT_EQ(SkewPolyF::tau(r3) * SkewPolyF::constant(r3, s.z), SkewPolyF::monomial(r3, s.z.pow(3), 1));
}

TEST(SkewMul, IdentityAndExpansion) {
  const F9 s;
  const FieldCoeffs r{s.f, 1};
  const SkewPolyF t = SkewPolyF::tau(r);
  const SkewPolyF f = t * t + SkewPolyF::constant(r, s.z) * t;
  EXPECT_EQ(f * SkewPolyF::constant(r, r.one()), f);
  // (tau - c^q)(tau + c) = tau^2 - c^{q+1}
  const FFElem c = s.z;
  const SkewPolyF lhs = (t - SkewPolyF::constant(r, c.pow(3))) * (t + SkewPolyF::constant(r, c));
  EXPECT_EQ(lhs, t * t - SkewPolyF::constant(r, c.pow(4)));
}

TEST(SkewMul, MatchesNaiveExpansion) {
  std::mt19937_64 rng(13);
  for (std::uint64_t q : {2, 3, 4, 9}) {
    const FieldId f = FieldRegistry::instance().field(field_of_order(q).characteristic(), 6);
    const FieldCoeffs r{f, field_of_order(q).degree()};
    auto rnd = [&] {
      std::vector<FFElem> c;
      for (int i = 0; i < 1 + static_cast<int>(rng() % 6); ++i) {
        Coords x;
        for (unsigned k = 0; k < f.degree(); ++k) x.push_back(static_cast<std::uint32_t>(rng() % f.characteristic()));
        c.emplace_back(f, x);
      }
      return SkewPolyF(r, c);
    };
    for (int i = 0; i < 50; ++i) {
      const SkewPolyF a = rnd(), b = rnd(), c = rnd();
      EXPECT_EQ(a * b, oracle::naive_skew_mul(a, b, q));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(SkewMul, MixedRingsRejected) {
  const F9 s;
  const FieldCoeffs other{s.f, 1};
  EXPECT_THROW(s.tau() * SkewPolyF::tau(other), DomainError);
}

TEST(SkewDivision, Examples) {
  const F9 s;
  const FieldCoeffs r{s.f, 1};
  const SkewPolyF t = SkewPolyF::tau(r);
  const SkewPolyF one = SkewPolyF::constant(r, r.one());

  const SkewDivMod a = skew_right_divmod(t * t + t, t);
  EXPECT_EQ(a.quot, t + one);
  EXPECT_TRUE(a.rem.is_zero());

  const SkewDivMod b = skew_right_divmod(t, t * t);
  EXPECT_TRUE(b.quot.is_zero());
  EXPECT_EQ(b.rem, t);

  const FFElem c = s.z;
  const SkewDivMod d = skew_right_divmod(t * t, t + SkewPolyF::constant(r, c));
  EXPECT_EQ(d.quot, t - SkewPolyF::constant(r, c.pow(3)));
  EXPECT_EQ(d.rem, SkewPolyF::constant(r, c.pow(4)));

  EXPECT_THROW(skew_right_divmod(t, SkewPolyF(r)), DomainError);
}

TEST(SkewDivision, RightDivides) {
  const F9 s;
  const FieldCoeffs r{s.f, 1};
  const SkewPolyF g = SkewPolyF::tau(r) + SkewPolyF::constant(r, s.z);
  const SkewPolyF h = SkewPolyF::tau(r, 3) + SkewPolyF::constant(r, s.z.pow(5));
  EXPECT_TRUE(right_divides(g, h * g));
  EXPECT_FALSE(right_divides(h * g, g));
}

TEST(SkewEval, Examples) {
  const F9 s;
  const FieldCoeffs r{s.f, 1};
  const FFElem x = s.z.pow(5);
  EXPECT_EQ(skew_eval(SkewPolyF::tau(r), x), x.pow(3));
  EXPECT_TRUE(skew_eval(SkewPolyF::tau(r, 2) + SkewPolyF::tau(r), FFElem::zero(s.f)).is_zero());

  const DrinfeldModule psi = DrinfeldModule::parse("T+1*t+1*t^2", field_of_order(3));
  const ReducedModule m = reduce_at(psi, parse_poly("T+1", field_of_order(3)));
  EXPECT_EQ(skew_eval(m.psibar_T(), FFElem::one(m.residue().field())), FFElem::one(m.residue().field()));
}

TEST(SkewEval, IsAdditiveAndComposes) {
  const F9 s;
  const FieldCoeffs r{s.f, 1};
  const FieldId big = FieldRegistry::instance().field(3, 6);
  const SkewPolyF f = SkewPolyF::tau(r, 2) + SkewPolyF::constant(r, s.z) * SkewPolyF::tau(r);
  const SkewPolyF g = SkewPolyF::tau(r) + SkewPolyF::constant(r, s.z.pow(3));
  const FFElem x = FFElem::gen(big), y = x.pow(100);
  EXPECT_EQ(skew_eval(f, x + y), skew_eval(f, x) + skew_eval(f, y));
  EXPECT_EQ(skew_eval(f * g, x), skew_eval(f, skew_eval(g, x)));
}

TEST(SkewCommutes, Examples) {
  const F9 s;
  const FieldCoeffs r{s.f, 1};
  const SkewPolyF f = SkewPolyF::tau(r) + SkewPolyF::constant(r, s.z);
  EXPECT_TRUE(skew_commutes(f, f));
  EXPECT_FALSE(skew_commutes(SkewPolyF::tau(r), SkewPolyF::constant(r, s.z)));

  const FieldId f3 = field_of_order(3);
  const DrinfeldModule psi = DrinfeldModule::parse("T+1*t+1*t^2", f3);
  for (const char* p : {"T", "T^2+1", "T^3+2*T+1"}) {
    const ReducedModule m = reduce_at(psi, parse_poly(p, f3));
    EXPECT_TRUE(skew_commutes(m.psibar_T(), m.tau(m.n())));
    // theta lies outside F_3 once deg p > 1
    EXPECT_EQ(skew_commutes(m.psibar_T(), m.tau(1)), m.n() == 1);
  }
}

TEST(SkewPolyA, TwistIsInflation) {
  const FieldId f3 = field_of_order(3);
  const PolyCoeffs r{f3};
  const Poly T = Poly::x(f3);
  const SkewPolyA t = SkewPolyA::tau(r);
  EXPECT_EQ(t * SkewPolyA::constant(r, T + r.one()), SkewPolyA::monomial(r, T.pow(3) + r.one(), 1));
}

TEST(SkewText, RoundTrip) {
  const FieldId f3 = field_of_order(3);
  for (const char* s : {"T+1*t+1*t^2", "T+(T^2+1)*t^3", "T+T*t+2*t^2"}) EXPECT_EQ(format_skew(parse_skew(s, f3)), s);
  EXPECT_THROW(parse_skew("T+t*T", f3), ParseError);
}

}  // namespace
}  // namespace drinfeld
