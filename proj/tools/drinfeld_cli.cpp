// Command-line front end.
//
//   drinfeld weil --q 3 --psi "T+1*t+1*t^2" --p T
//   drinfeld survey --q 3 --psi "T+1*t+1*t^2" --max-deg 4 --jobs 4 --format csv
//   drinfeld density --kind noncm --q 3 --max-deg 2
//
// Exit status: 0 on success, 1 on usage or domain errors, 2 when --strict
// is given and a surveyed prime fails one of its checks.

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drinfeld/division_fields.hpp"
#include "drinfeld/errors.hpp"
#include "drinfeld/survey.hpp"
#include "drinfeld/text.hpp"

namespace {

using namespace drinfeld;

struct Args {
  std::uint64_t q = 0;
  std::string psi;
  std::string p;
  std::string a;
  std::string m;
  std::vector<unsigned> deg;
  unsigned max_deg = 0;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
  bool strict = false;
  bool torsion = false;
  bool no_lattice = false;
  bool no_abhyankar = false;
  std::string kind;
  std::uint64_t c_K = 1;
  bool noncm = false;
};

struct Context {
  FieldId fq;
  DrinfeldModule psi;
};

Context load(const Args& args) {
  const FieldId fq = field_of_order(args.q);
  if (args.psi.empty()) throw DomainError("--psi is required");
  return {fq, DrinfeldModule::parse(args.psi, fq)};
}

ReducedModule load_reduced(const Args& args) {
  const Context c = load(args);
  if (args.p.empty()) throw DomainError("--p is required");
  return reduce_at(c.psi, parse_poly(args.p, c.fq));
}

std::vector<unsigned> degrees(const Args& args) {
  std::vector<unsigned> d = args.deg;
  if (args.max_deg > 0) {
    d.resize(args.max_deg);
    std::iota(d.begin(), d.end(), 1u);
  }
  if (d.empty()) throw DomainError("give --deg or --max-deg");
  return d;
}

bool rank2_odd(const ReducedModule& m) { return m.rank() == 2 && m.source().base().characteristic() != 2; }

std::string join(const std::vector<Poly>& v) {
  std::string s;
  for (const auto& f : v) s += (s.empty() ? "" : ", ") + format_poly(f);
  return "[" + s + "]";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_weil(const Args& args) {
  const ReducedModule m = load_reduced(args);
  const WeilPolynomial w = m.rank() == 2 ? weil_rank2(m) : weil_general(m);
  std::cout << w.str() << '\n';
  return 0;
}

int cmd_invariants(const Args& args) {
  const ReducedModule m = load_reduced(args);
  if (rank2_odd(m)) {
    const Rank2Invariants inv = rank2_invariants(m);
    std::cout << "P: " << inv.weil.str() << '\n'
              << "a_p: " << format_poly(inv.a_p) << '\n'
              << "u_p: " << format_scalar(inv.u_p) << '\n'
              << "b_p: " << format_poly(inv.b_p) << '\n'
              << "delta_p: " << format_poly(inv.delta_p) << '\n'
              << "supersingular: " << yes_no(inv.supersingular) << '\n';
    return 0;
  }
  const WeilPolynomial w = m.rank() == 2 ? weil_rank2(m) : weil_general(m);
  std::cout << "P: " << w.str() << '\n' << "b: " << join(invariant_factors(m)) << '\n';
  return 0;
}

int cmd_frobmat(const Args& args) {
  const ReducedModule m = load_reduced(args);
  if (args.a.empty()) throw DomainError("--a is required");
  const Poly a = parse_poly(args.a, m.source().base());
  if (args.torsion || !rank2_odd(m)) {
    std::cout << format_matrix(torsion_basis(m, a).frobenius_matrix) << '\n';
  } else {
    std::cout << format_matrix(frobenius_class_matrix(m, a).entries) << '\n';
  }
  return 0;
}

int cmd_split(const Args& args) {
  const ReducedModule m = load_reduced(args);
  if (args.a.empty() == args.m.empty()) throw DomainError("give exactly one of --a or --m");
  const FieldId fq = m.source().base();
  if (!args.a.empty()) {
    std::cout << yes_no(splits_completely(m, parse_poly(args.a, fq))) << '\n';
  } else {
    std::cout << yes_no(jm_splits(m, parse_poly(args.m, fq))) << '\n';
  }
  return 0;
}

int cmd_structure(const Args& args) {
  const ReducedModule m = load_reduced(args);
  if (rank2_odd(m)) {
    const ModuleStructure s = module_structure(m);
    std::cout << "d1: " << format_poly(s.d1) << '\n' << "d2: " << format_poly(s.d2) << '\n';
  } else {
    std::cout << join(module_structure_oracle(m)) << '\n';
  }
  return 0;
}

int cmd_abhyankar(const Args& args) {
  const Context c = load(args);
  const AbhyankarPolynomial f = abhyankar_poly(c.psi);
  if (args.p.empty()) {
    std::string s;
    for (std::size_t k = f.coeffs.size(); k-- > 0;) {
      if (f.coeffs[k].is_zero()) continue;
      const std::string mono = k == 0 ? "" : k == 1 ? "x" : "x^" + std::to_string(k);
      const std::string co = format_factor(f.coeffs[k]);
      s += (s.empty() ? "" : " + ") + (mono.empty() ? format_poly(f.coeffs[k]) : co.empty() ? mono : co + "*" + mono);
    }
    std::cout << s << '\n';
    return 0;
  }
  const ReducedModule m = reduce_at(c.psi, parse_poly(args.p, c.fq));
  const AbhyankarSplit sp = abhyankar_splits_mod(m);
  std::cout << "splits: " << yes_no(sp.splits) << '\n'
            << "law_holds: " << yes_no(sp.law_holds) << '\n'
            << "disc_condition: " << yes_no(sp.disc_condition) << '\n';
  if (sp.u)
    std::cout << "witness: p = " << format_scalar(*sp.u) << "*(" << format_poly(*sp.alpha) << ")^2 + T^2*("
              << format_poly(*sp.beta) << ")\n";
  return 0;
}

SurveyResult survey(const Args& args, const DrinfeldModule& psi) {
  SurveyOptions opt;
  opt.jobs = args.jobs == 0 ? 1 : args.jobs;
  opt.strict = args.strict;
  opt.with_lattice = !args.no_lattice;
  opt.with_abhyankar = !args.no_abhyankar;
  return run_survey(psi, degrees(args), opt);
}

int cmd_survey(const Args& args) {
  const Context c = load(args);
  const SurveyResult res = survey(args, c.psi);
  std::ofstream file;
  if (!args.out.empty()) {
    file.open(args.out);
    if (!file) throw DomainError("cannot open " + args.out);
  }
  std::ostream& out = args.out.empty() ? std::cout : file;
  if (args.format == "csv") {
    write_csv(out, res.records);
  } else {
    write_json(out, res.records);
  }
  for (const auto& r : res.records)
    if (r.failed()) std::cerr << "check failed at " << format_poly(r.p) << '\n';
  return args.strict && res.verification_failed ? 2 : 0;
}

int cmd_density(const Args& args) {
  const DensityKind kind = parse_density_kind(args.kind);
  DensityOptions opt;
  opt.c_K = args.c_K;
  opt.cm = !args.noncm;
  if (kind == DensityKind::noncm_truncated_sum && args.psi.empty()) {
    field_of_order(args.q);
    std::cout << noncm_truncated_sum(args.q, args.max_deg) << '\n';
    return 0;
  }
  if (kind == DensityKind::noncm_truncated_sum) opt.noncm_depth = args.max_deg;
  std::optional<DrinfeldModule> psi;
  if (args.psi.empty()) {
    if (kind != DensityKind::cm_supersingular && kind != DensityKind::bp_equals_one)
      throw DomainError("--psi is required for " + to_string(kind));
    const CMExample ex = cm_example(args.q);
    psi = ex.psi;
    opt.c_K = ex.c_K;
  } else {
    psi = load(args).psi;
  }
  Args sargs = args;
  sargs.no_abhyankar = kind != DensityKind::abhyankar_split;
  const SurveyResult res = survey(sargs, *psi);
  const DensityEstimate est = density_report(res.records, kind, opt);
  std::cout << "kind: " << to_string(est.kind) << '\n'
            << "x: " << est.x << '\n'
            << "observed: " << est.observed << '\n'
            << "population: " << est.population << '\n'
            << "predicted: " << est.predicted << '\n'
            << "note: " << est.tolerance_note << '\n';
  return args.strict && res.verification_failed ? 2 : 0;
}

int cmd_cm_example(const Args& args) {
  const CMExample ex = cm_example(args.q);
  std::cout << "psi: " << ex.psi.str() << '\n'
            << "j: " << format_poly(ex.j) << '\n'
            << "c_K: " << ex.c_K << '\n'
            << "delta: " << format_poly(ex.delta) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius invariants of Drinfeld F_q[T]-modules"};
  app.require_subcommand(1);
  Args args;

  auto module_flags = [&](CLI::App* sub, bool need_p) {
    sub->add_option("--q", args.q, "size of the constant field")->required();
    sub->add_option("--psi", args.psi, "psi_T in tau notation, e.g. T+1*t+1*t^2")->required();
    auto* p = sub->add_option("--p", args.p, "monic irreducible prime");
    if (need_p) p->required();
  };

  std::vector<std::pair<CLI::App*, int (*)(const Args&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Args&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };

  module_flags(add("weil", "characteristic polynomial of Frobenius", cmd_weil), true);
  module_flags(add("invariants", "a_p, u_p, b_p, delta_p", cmd_invariants), true);

  auto* frob = add("frobmat", "Frobenius conjugacy class mod a", cmd_frobmat);
  module_flags(frob, true);
  frob->add_option("--a", args.a, "level a, coprime to p")->required();
  frob->add_flag("--torsion", args.torsion, "compute through the a-torsion instead");

  auto* split = add("split", "complete splitting mod a, or splitting in J_m", cmd_split);
  module_flags(split, true);
  split->add_option("--a", args.a, "level for complete splitting of psi[a]");
  split->add_option("--m", args.m, "m for splitting in J_m");

  module_flags(add("structure", "A-module structure of the residue field", cmd_structure), true);
  module_flags(add("abhyankar", "Abhyankar polynomial, and its splitting mod p", cmd_abhyankar), false);

  auto survey_flags = [&](CLI::App* sub) {
    sub->add_option("--deg", args.deg, "prime degrees to survey");
    sub->add_option("--max-deg", args.max_deg, "survey all degrees 1..max");
    sub->add_option("--jobs", args.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", args.strict, "stop at the first failed check, exit 2");
    sub->add_flag("--no-lattice", args.no_lattice, "skip endomorphism lattice cross-checks");
  };

  auto* sv = add("survey", "all invariants at every prime of the given degrees", cmd_survey);
  module_flags(sv, false);
  survey_flags(sv);
  sv->add_option("--format", args.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sv->add_option("--out", args.out, "output file, default stdout");
  sv->add_flag("--no-abhyankar", args.no_abhyankar, "skip the Abhyankar law");

  auto* dn = add("density", "observed counts against predicted densities", cmd_density);
  dn->add_option("--kind", args.kind, "cm, bp1, abhyankar or noncm")->required();
  dn->add_option("--q", args.q, "size of the constant field")->required();
  dn->add_option("--psi", args.psi, "module; defaults to the CM example for cm and bp1");
  dn->add_option("--c-K", args.c_K, "constant field degree factor");
  dn->add_flag("--noncm", args.noncm, "bp1: predict with the truncated non-CM sum");
  survey_flags(dn);

  auto* cm = add("cm-example", "rank-2 module with CM by F_q[sqrt T]", cmd_cm_example);
  cm->add_option("--q", args.q, "odd prime power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) return fn(args);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
