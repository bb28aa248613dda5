#include <gtest/gtest.h>

#include <sstream>

#include "drinfeld/errors.hpp"
#include "drinfeld/survey.hpp"
#include "drinfeld/text.hpp"
#include "oracles.hpp"

namespace drinfeld {
namespace {

DrinfeldModule M(const char* s, std::uint64_t q = 3) { return DrinfeldModule::parse(s, field_of_order(q)); }

TEST(Survey, DegreeOneRecords) {
  const SurveyResult r = run_survey(M("T+1*t+1*t^2"), {1});
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_FALSE(r.verification_failed);
  const char* primes[] = {"T", "T+1", "T+2"};
  for (std::size_t i = 0; i < 3; ++i) {
    const SurveyRecord& rec = r.records[i];
    EXPECT_EQ(format_poly(rec.p), primes[i]);
    EXPECT_FALSE(rec.skipped());
    EXPECT_FALSE(rec.failed());
    EXPECT_FALSE(rec.warning());
    EXPECT_TRUE(rec.passed("weil_identity"));
    EXPECT_TRUE(rec.passed("oracle_agreement"));
  }
  EXPECT_FALSE(r.records[0].splits_abhyankar.has_value());
}

TEST(Survey, BadReductionIsMarked) {
  const SurveyResult r = run_survey(M("T+1*t+T*t^2"), {1});
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].skip, "bad_reduction");
  EXPECT_FALSE(r.records[1].skipped());
  EXPECT_NE(to_json(r.records[0]).find("\"skip\":\"bad_reduction\""), std::string::npos);
}

TEST(Survey, RecordCountsFollowNecklaceFormula) {
  const DrinfeldModule psi = M("T+1*t+(T^2+1)*t^2");
  for (unsigned d = 1; d <= 4; ++d) {
    const SurveyResult r = run_survey(psi, {d});
    std::size_t good = 0, skipped = 0;
    for (const auto& rec : r.records) (rec.skipped() ? skipped : good)++;
    EXPECT_EQ(good + skipped, oracle::necklace_count(3, d));
    // T^2 + 1 is the only prime dividing g_2
    EXPECT_EQ(skipped, d == 2 ? 1u : 0u);
  }
}

TEST(Survey, OutputIsIndependentOfWorkerCount) {
  const DrinfeldModule psi = M("T+1*t^2");
  SurveyOptions one, four;
  four.jobs = 4;
  std::ostringstream a, b, c;
  write_json(a, run_survey(psi, {1, 2, 3}, one).records);
  write_json(b, run_survey(psi, {1, 2, 3}, four).records);
  write_json(c, run_survey(psi, {3, 1, 2}, four).records);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
}

TEST(Survey, JsonKeysInSchemaOrder) {
  const SurveyResult r = run_survey(M("T+1*t+1*t^2"), {1});
  const std::string j = to_json(r.records[0]);
  const char* keys[] = {"q", "psi", "p", "deg_p", "a_p", "u_p", "b_invariants", "delta_p", "supersingular",
                        "d1", "d2", "splits_abhyankar", "checks_passed"};
  std::size_t pos = 0;
  for (const char* k : keys) {
    const std::size_t at = j.find("\"" + std::string(k) + "\":");
    ASSERT_NE(at, std::string::npos) << k;
    EXPECT_GT(at, pos == 0 ? 0 : pos);
    pos = at;
  }
  EXPECT_NE(j.find("\"a_p\":\"1\""), std::string::npos);
  EXPECT_NE(j.find("\"d2\":\"T+1\""), std::string::npos);
}

TEST(Survey, CsvHasHeaderAndOneRowPerPrime) {
  const SurveyResult r = run_survey(M("T+1*t+1*t^2"), {1, 2});
  std::ostringstream out;
  write_csv(out, r.records);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("q,psi,p,deg_p,a_p,u_p,b_invariants,delta_p,supersingular,d1,d2,splits_abhyankar,checks_passed", 0),
            0u);
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 6u);
}

TEST(Survey, RankThreeOverF2) {
  const SurveyResult r = run_survey(M("T+1*t+1*t^3", 2), {1, 2, 3});
  EXPECT_FALSE(r.verification_failed);
  for (const auto& rec : r.records) {
    EXPECT_FALSE(rec.a_p.has_value());
    EXPECT_EQ(rec.b_invariants.size(), 2u);
    EXPECT_TRUE(rec.passed("disc_identity"));
    EXPECT_TRUE(rec.passed("oracle_agreement"));
  }
}

TEST(Density, NonCmSum) {
  EXPECT_EQ(noncm_truncated_sum(3, 0), Rational(1));
  EXPECT_EQ(noncm_truncated_sum(3, 1), Rational(7, 8));
  EXPECT_EQ(noncm_truncated_sum(3, 2), Rational(841, 960));
  EXPECT_EQ(noncm_truncated_sum(3, 2), oracle::noncm_sum_by_enumeration(3, 2));
  EXPECT_EQ(noncm_truncated_sum(2, 2), oracle::noncm_sum_by_enumeration(2, 2));
  EXPECT_EQ(noncm_truncated_sum(5, 1), oracle::noncm_sum_by_enumeration(5, 1));
  Rational prev = 2;
  for (unsigned d = 0; d <= 5; ++d) {
    const Rational s = noncm_truncated_sum(3, d);
    EXPECT_GT(s, 0);
    EXPECT_LE(s, 1);
    EXPECT_NE(s, prev);
    prev = s;
  }
}

TEST(Density, PglOrders) {
  EXPECT_EQ(pgl_order(BigInt(5), 2), BigInt(120));
  EXPECT_EQ(pgl_order(BigInt(3), 2), BigInt(24));
  EXPECT_EQ(pgl_order(BigInt(2), 3), BigInt(168));
  const Poly m = parse_poly("T", field_of_order(3));
  EXPECT_EQ(oracle::gl2_order_by_count(m) / oracle::units_by_count(m), 24u);
}

TEST(Density, KindNames) {
  EXPECT_EQ(parse_density_kind("cm"), DensityKind::cm_supersingular);
  EXPECT_EQ(parse_density_kind("bp1"), DensityKind::bp_equals_one);
  EXPECT_EQ(parse_density_kind("abhyankar_split"), DensityKind::abhyankar_split);
  EXPECT_EQ(parse_density_kind("noncm"), DensityKind::noncm_truncated_sum);
  EXPECT_EQ(to_string(DensityKind::bp_equals_one), "bp_equals_one");
  EXPECT_THROW(parse_density_kind("other"), ParseError);
}

TEST(Density, AbhyankarPrediction) {
  const SurveyResult r = run_survey(M("T+1*t+1*t^2", 5), {1, 2});
  const DensityEstimate e = density_report(r.records, DensityKind::abhyankar_split);
  EXPECT_EQ(e.population, 14u);
  EXPECT_EQ(e.predicted, Rational(14, 120));
}

TEST(Density, MixedDegreesRejected) {
  const SurveyResult r = run_survey(M("T+1*t^2"), {1, 2});
  EXPECT_THROW(density_report(r.records, DensityKind::cm_supersingular), DomainError);
}

TEST(CmExample, ThreeSmall) {
  const CMExample ex = cm_example(3);
  const FieldId f3 = field_of_order(3);
  EXPECT_EQ(ex.j, parse_poly("T^2*(T+1)^4", f3));
  EXPECT_EQ(ex.c_K, 1u);
  EXPECT_EQ(ex.psi.g(2), ex.j.pow(3));
  const Poly T = Poly::x(f3);
  for (unsigned d = 1; d <= 4; ++d) {
    SurveyOptions opt;
    opt.with_abhyankar = false;
    const SurveyResult r = run_survey(ex.psi, {d}, opt);
    std::size_t bp1 = 0, ss = 0;
    for (const auto& rec : r.records) {
      if (rec.skipped()) continue;
      const bool s = rec.supersingular.value_or(false);
      EXPECT_EQ(s, !oracle::is_square_by_search(T, rec.p)) << format_poly(rec.p);
      if (s) ++ss;
      if (rec.b_invariants[0].is_one()) ++bp1;
    }
    EXPECT_GE(bp1, ss);
  }
  EXPECT_THROW(cm_example(4), DomainError);
}

}  // namespace
}  // namespace drinfeld
