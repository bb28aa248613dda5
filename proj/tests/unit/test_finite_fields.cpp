#include <gtest/gtest.h>

#include <random>

#include "drinfeld/errors.hpp"
#include "drinfeld/finite_field.hpp"
#include "drinfeld/text.hpp"
#include "oracles.hpp"

namespace drinfeld {
namespace {

FFElem z9() { return FieldRegistry::instance().primitive_element(field_of_order(9)); }

TEST(PrimeField, InverseAndPower) {
  const PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.pow(3, 6), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_THROW(f.inv(0), std::domain_error);
}

TEST(PrimeField, NullSpaceOfRankDeficientMatrix) {
  MatrixFp m(3, 2, 3);
  m(0, 0) = 1, m(0, 1) = 2, m(0, 2) = 0;
  m(1, 0) = 0, m(1, 1) = 1, m(1, 2) = 1;
  const auto ns = null_space(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(rank(m), 2u);
  const auto img = m.apply(ns[0]);
  EXPECT_EQ(img, (std::vector<std::uint32_t>{0, 0}));
}

TEST(FieldRegistry, TrivialExtensionIsTheBase) {
  const FieldTower tower(field_of_order(3));
  EXPECT_EQ(tower.make_extension(tower.base(), 1), tower.base());
}

TEST(FieldRegistry, ModulusIsLexSmallestIrreducible) {
  // x^2 + 1 is the first monic irreducible quadratic over F_3 under the
  // constant-term-first order.
  const FieldId f9 = field_of_order(9);
  const auto mod = f9.modulus();
  EXPECT_EQ(std::vector<std::uint32_t>(mod.begin(), mod.end()), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(field_of_order(9), FieldRegistry::instance().field(3, 2));
}

TEST(FieldRegistry, RejectsNonPrimePowers) {
  EXPECT_THROW(field_of_order(6), DomainError);
  EXPECT_THROW(field_of_order(1), DomainError);
}

TEST(FieldRegistry, DegreeCap) {
  auto& reg = FieldRegistry::instance();
  const unsigned saved = reg.max_degree();
  reg.set_max_degree(4);
  EXPECT_THROW(reg.field(3, 5), ResourceError);
  reg.set_max_degree(saved);
}

TEST(FieldRegistry, EmbeddingIntoF729IsAHomomorphism) {
  const FieldTower tower(field_of_order(9));
  const FieldId f729 = tower.make_extension(tower.base(), 3);
  EXPECT_EQ(f729.order(), 729);
  const auto& elems = FieldRegistry::instance().elements(tower.base());
  for (const auto& a : elems)
    for (const auto& b : elems) {
      EXPECT_EQ(embed(a * b, f729), embed(a, f729) * embed(b, f729));
      EXPECT_EQ(embed(a + b, f729), embed(a, f729) + embed(b, f729));
    }
}

TEST(FieldRegistry, EmbeddingsCompose) {
  auto& reg = FieldRegistry::instance();
  const FieldId f3 = reg.field(3, 3), f6 = reg.field(3, 6), f12 = reg.field(3, 12);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Coords c;
    for (int k = 0; k < 3; ++k) c.push_back(static_cast<std::uint32_t>(rng() % 3));
    const FFElem x(f3, c);
    EXPECT_EQ(embed(embed(x, f6), f12), embed(x, f12));
    EXPECT_EQ(restrict_to(embed(x, f12), f3), x);
  }
}

TEST(FieldRegistry, RestrictionOutsideSubfieldFails) {
  const FieldId f9 = field_of_order(9);
  EXPECT_FALSE(restrict_to(FFElem::gen(f9), field_of_order(3)).has_value());
}

TEST(FFElem, MultiplicationMatchesSchoolbook) {
  auto& reg = FieldRegistry::instance();
  std::mt19937_64 rng(11);
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {3, 6}, {5, 3}, {7, 2}, {3, 40}}) {
    const FieldId f = reg.field(p, n);
    for (int i = 0; i < 200; ++i) {
      Coords a, b;
      for (unsigned k = 0; k < n; ++k) {
        a.push_back(static_cast<std::uint32_t>(rng() % p));
        b.push_back(static_cast<std::uint32_t>(rng() % p));
      }
      const FFElem x(f, a), y(f, b);
      EXPECT_EQ(x * y, oracle::schoolbook_mul(x, y));
      if (!y.is_zero()) {
        EXPECT_EQ(x / y * y, x);
      }
    }
  }
}

TEST(FFElem, ZeroHasNoInverse) { EXPECT_THROW(FFElem::zero(field_of_order(9)).inverse(), DomainError); }

TEST(FieldTower, FrobeniusFixesBase) {
  const FieldTower tower(field_of_order(3));
  const FieldId f9 = field_of_order(9);
  const FFElem c = FFElem::from_int(f9, 2);
  EXPECT_EQ(tower.frobenius_power(c, 1), c);
  EXPECT_EQ(tower.frobenius_power(c, 5), c);
}

TEST(FieldTower, FrobeniusOnF9HasOrderTwo) {
  const FieldTower tower(field_of_order(3));
  const FFElem z = z9();
  EXPECT_EQ(tower.frobenius_power(z, 0), z);
  EXPECT_EQ(tower.frobenius_power(z, 1), z.pow(3));
  EXPECT_EQ(tower.frobenius_power(tower.frobenius_power(z, 1), 1), z);
  EXPECT_EQ(tower.frobenius_power(z, -1), z.pow(3));
}

TEST(FieldTower, NormOfGenerator) {
  const FieldTower tower(field_of_order(3));
  const FieldId f9 = field_of_order(9);
  EXPECT_EQ(tower.norm_to_base(FFElem::one(f9)), FFElem::one(tower.base()));
  EXPECT_EQ(tower.norm_to_base(FFElem::zero(f9)), FFElem::zero(tower.base()));
  const FFElem z = z9();
  const FFElem n = tower.norm_to_base(z);
  EXPECT_EQ(embed(n, f9), z * z.pow(3));
  EXPECT_EQ(embed(n, f9), z.pow(4));
}

TEST(FieldTower, TraceIsAdditive) {
  const FieldTower tower(field_of_order(5));
  const FieldId f = tower.make_extension(tower.base(), 4);
  const FFElem a = FFElem::gen(f), b = a.pow(37);
  EXPECT_EQ(tower.trace_to_base(a + b), tower.trace_to_base(a) + tower.trace_to_base(b));
}

TEST(FieldTower, RelativeDegree) {
  const FieldTower tower(field_of_order(9));
  EXPECT_EQ(tower.relative_degree(FieldRegistry::instance().field(3, 6)), 3u);
  EXPECT_THROW(tower.relative_degree(FieldRegistry::instance().field(3, 3)), DomainError);
}

TEST(Scalars, PrimitiveElementText) {
  const FieldId f9 = field_of_order(9);
  EXPECT_EQ(format_scalar(z9()), "z");
  EXPECT_EQ(parse_scalar("z^2", f9), z9().pow(2));
  EXPECT_EQ(parse_scalar("2", f9), FFElem::from_int(f9, 2));
  EXPECT_THROW(parse_scalar("z", field_of_order(3)), ParseError);
}

TEST(Scalars, PrimitiveElementGeneratesGroup) {
  const FieldId f25 = field_of_order(25);
  const FFElem z = FieldRegistry::instance().primitive_element(f25);
  for (std::uint64_t d : {2, 3, 4, 6, 8, 12}) EXPECT_FALSE(z.pow(d).is_one());
  EXPECT_TRUE(z.pow(24).is_one());
}

}  // namespace
}  // namespace drinfeld
