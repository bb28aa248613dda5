#include "drinfeld/survey.hpp"

#include <algorithm>
#include <atomic>
#include <nlohmann/json.hpp>
#include <ostream>
#include <random>
#include <set>
#include <thread>

#include "drinfeld/division_fields.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/frobenius.hpp"
#include "drinfeld/text.hpp"
#include "drinfeld/torsion.hpp"

namespace drinfeld {

namespace {

constexpr std::string_view kWeilIdentity = "weil_identity";
constexpr std::string_view kOracleAgreement = "oracle_agreement";

Poly one_in(FieldId f) { return Poly::constant(FFElem::one(f)); }

std::uint64_t q_of(FieldId fq) { return static_cast<std::uint64_t>(fq.order()); }

std::vector<std::string> psi_terms(const DrinfeldModule& psi) {
  std::vector<std::string> out;
  const SkewPolyA t = psi.psi_T();
  for (const auto& c : t.coeffs()) out.push_back(format_poly(c));
  return out;
}

void check(SurveyRecord& rec, std::string_view name, bool ok) {
  (ok ? rec.checks_passed : rec.checks_failed).emplace_back(name);
}

Poly monic_product(const std::vector<Poly>& fs, FieldId fq) {
  Poly acc = one_in(fq);
  for (const auto& f : fs) acc *= f;
  return acc.monic();
}

}  // namespace

bool SurveyRecord::passed(std::string_view c) const {
  return std::find(checks_passed.begin(), checks_passed.end(), c) != checks_passed.end();
}

bool SurveyRecord::warning() const {
  return !skipped() && !(passed(kWeilIdentity) && passed(kOracleAgreement));
}

SurveyRecord survey_prime(const DrinfeldModule& psi, const Poly& p, const SurveyOptions& opt) {
  const FieldId fq = psi.base();
  SurveyRecord rec;
  rec.q = q_of(fq);
  rec.psi = psi_terms(psi);
  rec.p = p;
  rec.deg_p = static_cast<unsigned>(p.deg());
  try {
    if (!good_reduction_at(psi, p)) {
      rec.skip = "bad_reduction";
      return rec;
    }
    const ReducedModule m = reduce_at(psi, p);
    const unsigned r = psi.rank();
    const bool odd = fq.characteristic() != 2;
    const bool rank2 = r == 2;

    const WeilPolynomial w = rank2 ? weil_rank2(m) : weil_general(m);
    rec.weil = w.str();
    check(rec, kWeilIdentity, weil_identity_holds(m, w));
    if (rank2) check(rec, "rh_bound", 2 * w.coeffs[1].deg() <= static_cast<long>(m.n()));

    const std::vector<Poly> oracle = module_structure_oracle(m);
    std::optional<Rank2Invariants> inv;
    if (rank2) {
      rec.a_p = w.coeffs[1];
      rec.u_p = w.unit;
      rec.supersingular = w.coeffs[1].is_zero();
    }
    if (rank2 && odd) {
      inv = rank2_invariants(m);
      rec.b_invariants = {inv->b_p};
      rec.delta_p = inv->delta_p;
      const ModuleStructure ms = module_structure(*inv);
      rec.d1 = ms.d1;
      rec.d2 = ms.d2;
      check(rec, kOracleAgreement, ms.nonunit() == oracle);
      check(rec, "bp_divides_conductor", divides(inv->b_p * inv->b_p, inv->d));
    } else {
      // the oracle's factors multiply to the Euler-Poincare characteristic P(1)
      Poly p1 = one_in(fq);
      for (const auto& c : w.coeffs) p1 += c;
      check(rec, kOracleAgreement, monic_product(oracle, fq) == p1.monic());
    }

    if (opt.with_lattice) {
      const EndLattice lattice = end_lattice(m);
      const std::vector<Poly> b = invariant_factors(lattice);
      if (inv)
        check(rec, "lattice_agreement", b == rec.b_invariants);
      else
        rec.b_invariants = b;
      bool chain = true;
      for (std::size_t i = 0; i + 1 < b.size(); ++i) chain = chain && divides(b[i], b[i + 1]);
      check(rec, "divisibility_chain", chain);
      if (r % fq.characteristic() != 0) check(rec, "disc_identity", disc_check(m, w, lattice).holds);
    }

    if (opt.with_abhyankar && !(p == Poly::x(fq)) && !rec.b_invariants.empty()) {
      const AbhyankarSplit s = abhyankar_splits_mod(m, rec.b_invariants.front(), w);
      rec.splits_abhyankar = s.splits;
      check(rec, "abhyankar_law", s.law_holds);
      check(rec, "abhyankar_disc", s.disc_condition);
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

SurveyResult run_survey(const DrinfeldModule& psi, const std::vector<unsigned>& degrees, const SurveyOptions& opt) {
  if (degrees.empty()) throw DomainError("survey needs at least one degree");
  std::vector<unsigned> degs = degrees;
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  std::vector<Poly> primes;
  for (unsigned d : degs) {
    if (d == 0) throw DomainError("survey degrees must be positive");
    for (auto& p : enumerate_monic_irreducibles(psi.base(), d)) primes.push_back(std::move(p));
  }

  SurveyResult res;
  res.records.resize(primes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto work = [&] {
    for (;;) {
      if (stop.load()) return;
      const std::size_t i = next.fetch_add(1);
      if (i >= primes.size()) return;
      res.records[i] = survey_prime(psi, primes[i], opt);
      if (opt.strict && res.records[i].failed()) stop.store(true);
    }
  };
  unsigned jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(primes.size(), 1)));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  // every index below a failure was claimed earlier, so it is complete
  for (std::size_t i = 0; i < res.records.size(); ++i)
    if (res.records[i].failed()) {
      res.verification_failed = true;
      if (opt.strict) res.records.resize(i + 1);
      break;
    }
  return res;
}

namespace {

nlohmann::ordered_json json_of(const SurveyRecord& r) {
  using J = nlohmann::ordered_json;
  auto opt_poly = [](const std::optional<Poly>& x) { return x ? J(format_poly(*x)) : J(nullptr); };
  auto opt_bool = [](const std::optional<bool>& x) { return x ? J(*x) : J(nullptr); };
  J j;
  j["q"] = r.q;
  j["psi"] = r.psi;
  j["p"] = format_poly(r.p);
  j["deg_p"] = r.deg_p;
  j["a_p"] = opt_poly(r.a_p);
  j["u_p"] = r.u_p ? J(format_scalar(*r.u_p)) : J(nullptr);
  J b = J::array();
  for (const auto& x : r.b_invariants) b.push_back(format_poly(x));
  j["b_invariants"] = b;
  j["delta_p"] = opt_poly(r.delta_p);
  j["supersingular"] = opt_bool(r.supersingular);
  j["d1"] = opt_poly(r.d1);
  j["d2"] = opt_poly(r.d2);
  j["splits_abhyankar"] = opt_bool(r.splits_abhyankar);
  j["checks_passed"] = r.checks_passed;
  j["checks_failed"] = r.checks_failed;
  j["weil"] = r.weil ? J(*r.weil) : J(nullptr);
  j["skip"] = r.skip ? J(*r.skip) : J(nullptr);
  j["warning"] = r.warning();
  j["error"] = r.error ? J(*r.error) : J(nullptr);
  return j;
}

std::string csv_cell(const nlohmann::ordered_json& v) {
  std::string s;
  if (v.is_null()) return s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ';';
      s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
    }
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

std::string to_json(const SurveyRecord& rec) { return json_of(rec).dump(); }

void write_json(std::ostream& out, const std::vector<SurveyRecord>& records) {
  for (const auto& r : records) out << to_json(r) << '\n';
}

void write_csv(std::ostream& out, const std::vector<SurveyRecord>& records) {
  const auto header = json_of(SurveyRecord{});
  bool first = true;
  for (const auto& [k, v] : header.items()) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  out << '\n';
  for (const auto& r : records) {
    const auto j = json_of(r);
    first = true;
    for (const auto& [k, v] : j.items()) {
      out << (first ? "" : ",") << csv_cell(v);
      first = false;
    }
    out << '\n';
  }
}

std::string to_string(DensityKind k) {
  switch (k) {
    case DensityKind::cm_supersingular: return "cm_supersingular";
    case DensityKind::bp_equals_one: return "bp_equals_one";
    case DensityKind::abhyankar_split: return "abhyankar_split";
    case DensityKind::noncm_truncated_sum: return "noncm_truncated_sum";
  }
  return "unknown";
}

DensityKind parse_density_kind(std::string_view s) {
  if (s == "cm" || s == "cm_supersingular") return DensityKind::cm_supersingular;
  if (s == "bp1" || s == "bp_equals_one") return DensityKind::bp_equals_one;
  if (s == "abhyankar" || s == "abhyankar_split") return DensityKind::abhyankar_split;
  if (s == "noncm" || s == "noncm_truncated_sum") return DensityKind::noncm_truncated_sum;
  throw ParseError("unknown density kind '" + std::string(s) + "'");
}

BigInt pgl_order(const BigInt& q, unsigned r) {
  if (r == 0) throw DomainError("PGL_0 is undefined");
  BigInt n = 1;
  for (unsigned i = 0; i < r * (r - 1) / 2; ++i) n *= q;
  BigInt qi = q;
  for (unsigned i = 2; i <= r; ++i) {
    qi *= q;
    n *= qi - 1;
  }
  return n;
}

Rational noncm_truncated_sum(std::uint64_t q, unsigned max_deg) {
  // Multiplicativity over prime factors: choose k distinct primes of each
  // degree d, each contributing -1/#PGL_2(F_{q^d}).
  std::vector<Rational> S(max_deg + 1, Rational(0));
  S[0] = 1;
  for (unsigned d = 1; d <= max_deg; ++d) {
    const BigInt qd = boost::multiprecision::pow(BigInt(q), d);
    const Rational w(BigInt(-1), qd * (qd * qd - 1));
    const BigInt nd = count_monic_irreducibles(BigInt(q), d);
    std::vector<Rational> next = S;
    Rational term = 1;
    BigInt binom = 1;
    for (unsigned k = 1; k * d <= max_deg && BigInt(k) <= nd; ++k) {
      binom = binom * (nd - (k - 1)) / k;
      term *= w;
      const Rational c = term * Rational(binom);
      for (unsigned t = 0; t + k * d <= max_deg; ++t) next[t + k * d] += S[t] * c;
    }
    S = std::move(next);
  }
  Rational total = 0;
  for (const auto& s : S) total += s;
  return total;
}

DensityEstimate density_report(const std::vector<SurveyRecord>& records, DensityKind kind, const DensityOptions& opt) {
  DensityEstimate est;
  est.kind = kind;
  std::set<unsigned> degs;
  std::uint64_t q = 0;
  unsigned rank = 0;
  for (const auto& r : records) {
    degs.insert(r.deg_p);
    q = r.q;
    rank = static_cast<unsigned>(r.psi.size()) - 1;
  }
  if (records.empty()) throw DomainError("density_report needs at least one record");
  const bool per_degree = kind == DensityKind::cm_supersingular || kind == DensityKind::bp_equals_one;
  if (per_degree && degs.size() != 1) throw DomainError(to_string(kind) + " needs records of a single degree");
  est.x = *degs.rbegin();

  const BigInt qx = boost::multiprecision::pow(BigInt(q), est.x);
  const Rational cm_main = Rational(BigInt(opt.c_K) * qx, BigInt(2 * est.x));
  for (const auto& r : records) {
    if (r.skipped() || r.error) continue;
    const bool b_one = !r.b_invariants.empty() && std::all_of(r.b_invariants.begin(), r.b_invariants.end(),
                                                              [](const Poly& b) { return b.is_one(); });
    switch (kind) {
      case DensityKind::cm_supersingular:
        ++est.population;
        if (r.supersingular.value_or(false)) ++est.observed;
        break;
      case DensityKind::bp_equals_one:
      case DensityKind::noncm_truncated_sum:
        ++est.population;
        if (b_one) ++est.observed;
        break;
      case DensityKind::abhyankar_split:
        if (!r.splits_abhyankar) break;
        ++est.population;
        if (*r.splits_abhyankar) ++est.observed;
        break;
    }
  }
  switch (kind) {
    case DensityKind::cm_supersingular:
      est.predicted = cm_main;
      est.tolerance_note = "main term c_K/2 * q^x/x; the error term is O(q^(x/2)) with an ineffective constant";
      break;
    case DensityKind::bp_equals_one:
      if (opt.cm) {
        est.predicted = cm_main;
        est.tolerance_note = "CM main term; ordinary primes with b_p = 1 add O(q^(x/2))";
      } else {
        est.predicted = noncm_truncated_sum(q, opt.noncm_depth) * Rational(est.population);
        est.tolerance_note = "truncated non-CM sum to depth " + std::to_string(opt.noncm_depth) +
                             " times the prime count; an estimator assuming surjective images";
      }
      break;
    case DensityKind::abhyankar_split:
      est.predicted = Rational(BigInt(est.population), pgl_order(BigInt(q), rank));
      est.tolerance_note = "Dirichlet density 1/#PGL_r(F_q) times the prime count";
      break;
    case DensityKind::noncm_truncated_sum:
      est.x = opt.noncm_depth;
      est.predicted = noncm_truncated_sum(q, opt.noncm_depth);
      est.tolerance_note = "density estimator truncated at deg m <= " + std::to_string(opt.noncm_depth) +
                           "; compare with observed/population";
      break;
  }
  return est;
}

CMExample cm_example(std::uint64_t q) {
  const FieldId fq = field_of_order(q);
  if (fq.characteristic() == 2) throw DomainError("cm_example requires odd q");
  const Poly T = Poly::x(fq);
  const Poly one = one_in(fq);
  // (U + U^q)^{q+1} = U^{q+1} (1 + U^{q-1})^{q+1} with U^2 = T
  const Poly j = T.pow((q + 1) / 2) * (one + T.pow((q - 1) / 2)).pow(q + 1);
  CMExample ex{DrinfeldModule(fq, {j, j.pow(q)}), 1, j, Poly(fq)};

  std::mt19937_64 rng(0x5eedc0deULL);
  const auto& elems = FieldRegistry::instance().elements(fq);
  std::set<Poly> seen;
  std::optional<Poly> delta;
  while (seen.size() < 20) {
    const unsigned d = 1 + static_cast<unsigned>(rng() % 4);
    std::vector<FFElem> c;
    for (unsigned i = 0; i < d; ++i) c.push_back(elems[rng() % elems.size()]);
    c.push_back(FFElem::one(fq));
    const Poly p(fq, std::move(c));
    if (seen.count(p) || !is_irreducible(p) || !good_reduction_at(ex.psi, p)) continue;
    seen.insert(p);
    const Rank2Invariants inv = rank2_invariants(reduce_at(ex.psi, p));
    if (inv.supersingular) continue;
    if (!delta) delta = inv.delta_monic;
    if (!(*delta == inv.delta_monic))
      throw VerificationError("ordinary primes give different delta: " + format_poly(*delta) + " and " +
                              format_poly(inv.delta_monic));
  }
  if (delta) ex.delta = *delta;
  return ex;
}

}  // namespace drinfeld
