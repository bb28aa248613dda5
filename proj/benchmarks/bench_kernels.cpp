#include <benchmark/benchmark.h>

#include <random>

#include "drinfeld/frobenius.hpp"
#include "drinfeld/text.hpp"

namespace {

using namespace drinfeld;

FFElem random_elem(std::mt19937_64& rng, FieldId f) {
  Coords c;
  for (unsigned i = 0; i < f.degree(); ++i) c.push_back(static_cast<std::uint32_t>(rng() % f.characteristic()));
  return FFElem(f, c);
}

void BM_FieldMul(benchmark::State& state) {
  const FieldId f = FieldRegistry::instance().field(3, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  FFElem x = random_elem(rng, f);
  const FFElem y = random_elem(rng, f);
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(240);

void BM_FieldInverse(benchmark::State& state) {
  const FieldId f = FieldRegistry::instance().field(3, static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(2);
  const FFElem x = random_elem(rng, f);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_FieldInverse)->Arg(6)->Arg(240);

void BM_SkewMul(benchmark::State& state) {
  const FieldId f = FieldRegistry::instance().field(3, 6);
  const FieldCoeffs ring{f, 1};
  std::mt19937_64 rng(3);
  std::vector<FFElem> a, b;
  for (long i = 0; i <= state.range(0); ++i) {
    a.push_back(random_elem(rng, f));
    b.push_back(random_elem(rng, f));
  }
  const SkewPolyF x(ring, a), y(ring, b);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_SkewMul)->Arg(8)->Arg(32);

// first monic irreducible of degree d, low coefficients read off n in base p
Poly prime_of_degree(FieldId fq, unsigned d) {
  const Poly T = Poly::x(fq);
  const auto p = static_cast<std::int64_t>(fq.characteristic());
  for (std::int64_t n = 1;; ++n) {
    Poly f = T.pow(d), mono = Poly::constant(fq, 1);
    for (std::int64_t k = n; k > 0; k /= p, mono = mono * T) f = f + Poly::constant(fq, k % p) * mono;
    if (is_irreducible(f)) return f;
  }
}

void BM_WeilRank2(benchmark::State& state) {
  const FieldId fq = field_of_order(3);
  const DrinfeldModule psi = DrinfeldModule::parse("T+1*t+1*t^2", fq);
  const ReducedModule m = reduce_at(psi, prime_of_degree(fq, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(weil_rank2(m));
}
BENCHMARK(BM_WeilRank2)->Arg(4)->Arg(8)->Arg(16);

void BM_Rank2Invariants(benchmark::State& state) {
  const FieldId fq = field_of_order(3);
  const DrinfeldModule psi = DrinfeldModule::parse("T+1*t^2", fq);
  const ReducedModule m = reduce_at(psi, prime_of_degree(fq, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rank2_invariants(m));
}
BENCHMARK(BM_Rank2Invariants)->Arg(4)->Arg(8);

void BM_TorsionBasis(benchmark::State& state) {
  const FieldId fq = field_of_order(3);
  const DrinfeldModule psi = DrinfeldModule::parse("T+1*t+1*t^2", fq);
  const ReducedModule m = reduce_at(psi, prime_of_degree(fq, 3));
  const Poly a = state.range(0) == 1 ? parse_poly("T+1", fq) : parse_poly("T^2+1", fq);
  for (auto _ : state) benchmark::DoNotOptimize(torsion_basis(m, a));
}
BENCHMARK(BM_TorsionBasis)->Arg(1)->Arg(2);

void BM_EndLattice(benchmark::State& state) {
  const FieldId fq = field_of_order(2);
  const DrinfeldModule psi = DrinfeldModule::parse("T+1*t+1*t^3", fq);
  const ReducedModule m = reduce_at(psi, prime_of_degree(fq, static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(end_lattice(m));
}
BENCHMARK(BM_EndLattice)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
