#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qniep/crealizable.hpp"
#include "qniep/criteria_partition.hpp"
#include "qniep/matrix.hpp"
#include "qniep/reductions.hpp"
#include "qniep/survey.hpp"

namespace {

using namespace qniep;

RationalMatrix random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4));
    }
  }
  return m;
}

IntegerList geometric_instance(int n) {
  std::mt19937_64 rng(n);
  std::vector<mpz_class> entries;
  for (int i = 0; i < n; ++i) entries.emplace_back(1 + rng() % 50);
  return IntegerList(entries);
}

void BM_CharPoly(benchmark::State& state) {
  const RationalMatrix m = random_matrix(static_cast<int>(state.range(0)), 99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(char_poly(m));
  }
}
BENCHMARK(BM_CharPoly)->Arg(4)->Arg(8)->Arg(12);

void BM_SolvePartition(benchmark::State& state) {
  const IntegerList I = geometric_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_partition(I));
  }
}
BENCHMARK(BM_SolvePartition)->Arg(8)->Arg(16)->Arg(24);

void BM_CheckSpOnReductionImage(benchmark::State& state) {
  const SpectrumList image = reduce_to_sp(geometric_instance(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_sp(image));
  }
}
BENCHMARK(BM_CheckSpOnReductionImage)->Arg(8)->Arg(10)->Arg(12);

void BM_CheckBo(benchmark::State& state) {
  // One positive head with q negatives drives the Bell-number enumeration.
  std::vector<Rational> entries{Rational(30)};
  for (int i = 0; i < state.range(0); ++i) entries.push_back(Rational(-2 - (i % 3)));
  const SpectrumList s{entries};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_bo(s));
  }
}
BENCHMARK(BM_CheckBo)->Arg(5)->Arg(7)->Arg(9);

void BM_SearchBms(benchmark::State& state) {
  const SpectrumList s = SpectrumList::parse("4,2,-3,-3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_bms(s, 4000));
  }
}
BENCHMARK(BM_SearchBms);

void BM_SampleAndAudit(benchmark::State& state) {
  SampleConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.samples = 100;
  cfg.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(audit_inclusions(cfg));
  }
  state.SetItemsProcessed(state.iterations() * cfg.samples);
}
BENCHMARK(BM_SampleAndAudit)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
