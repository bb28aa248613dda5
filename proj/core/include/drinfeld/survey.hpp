#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld {

using Rational = boost::multiprecision::cpp_rational;

/// One surveyed prime. Optional fields are absent when they do not apply
/// (bad reduction, rank other than 2, even q).
struct SurveyRecord {
  std::uint64_t q = 0;
  std::vector<std::string> psi;  // psi_T coefficients, low tau-degree first
  Poly p;
  unsigned deg_p = 0;
  std::optional<Poly> a_p;
  std::optional<FFElem> u_p;
  std::vector<Poly> b_invariants;
  std::optional<Poly> delta_p;
  std::optional<bool> supersingular;
  std::optional<Poly> d1;
  std::optional<Poly> d2;
  std::optional<bool> splits_abhyankar;
  std::vector<std::string> checks_passed;
  // additive fields
  std::vector<std::string> checks_failed;
  std::optional<std::string> weil;
  std::optional<std::string> skip;   // "bad_reduction"
  std::optional<std::string> error;  // exception text

  bool skipped() const noexcept { return skip.has_value(); }
  bool passed(std::string_view check) const;
  /// Good record lacking the Weil identity or oracle agreement checks.
  bool warning() const;
  bool failed() const { return !skipped() && (error.has_value() || !checks_failed.empty()); }
};

struct SurveyOptions {
  unsigned jobs = 1;
  /// Stop scheduling new primes after the first failed record.
  bool strict = false;
  bool with_lattice = true;
  bool with_abhyankar = true;
};

struct SurveyResult {
  std::vector<SurveyRecord> records;  // ordered by degree, then lexicographically
  bool verification_failed = false;
};

/// Computes and cross-checks every invariant at one prime.
SurveyRecord survey_prime(const DrinfeldModule& psi, const Poly& p, const SurveyOptions& opt = {});

/// All monic irreducibles of the given degrees, computed on `jobs` workers
/// and returned in a fixed order regardless of completion order.
SurveyResult run_survey(const DrinfeldModule& psi, const std::vector<unsigned>& degrees, const SurveyOptions& opt = {});

/// JSON lines, keys in schema order.
void write_json(std::ostream& out, const std::vector<SurveyRecord>& records);
std::string to_json(const SurveyRecord& rec);
/// CSV with a header row; lists are joined with ';'.
void write_csv(std::ostream& out, const std::vector<SurveyRecord>& records);

enum class DensityKind { cm_supersingular, bp_equals_one, abhyankar_split, noncm_truncated_sum };

std::string to_string(DensityKind k);
/// Accepts `cm`, `cm_supersingular`, `bp1`, `bp_equals_one`, `abhyankar`,
/// `abhyankar_split`, `noncm`, `noncm_truncated_sum`.
DensityKind parse_density_kind(std::string_view s);

struct DensityOptions {
  std::uint64_t c_K = 1;
  /// For bp_equals_one: predict with the CM main term rather than the
  /// truncated non-CM sum.
  bool cm = true;
  unsigned noncm_depth = 2;
};

struct DensityEstimate {
  DensityKind kind = DensityKind::cm_supersingular;
  unsigned x = 0;                // degree, or max degree for cumulative kinds
  std::uint64_t observed = 0;
  std::uint64_t population = 0;  // primes of good reduction considered
  Rational predicted;
  std::string tolerance_note;
};

/// Throws DomainError on mixed degrees for the per-degree kinds
/// (cm_supersingular, bp_equals_one).
DensityEstimate density_report(const std::vector<SurveyRecord>& records, DensityKind kind,
                               const DensityOptions& opt = {});

/// #PGL_r(F_q).
BigInt pgl_order(const BigInt& q, unsigned r);
/// Sum over monic squarefree m, deg m <= max_deg, of mu(m) / #PGL_2(A/mA).
Rational noncm_truncated_sum(std::uint64_t q, unsigned max_deg);

struct CMExample {
  DrinfeldModule psi;
  std::uint64_t c_K;
  Poly j;
  /// Monic part of the common delta of the sampled ordinary primes.
  Poly delta;
};

/// Rank-2 module with CM by F_q[U], U^2 = T, and j = (U + U^q)^{q+1}.
/// Checks at 20 sampled primes that all ordinary delta_p agree.
CMExample cm_example(std::uint64_t q);

}  // namespace drinfeld
