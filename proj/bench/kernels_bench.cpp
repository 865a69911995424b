// Serial reference vs OpenMP kernels on <_G over the 3-chain term universe.

#include <benchmark/benchmark.h>

#include <map>

#include "ordnot/kernels.hpp"
#include "ordnot/theta.hpp"

using namespace ordnot;

namespace {

const std::vector<GTerm>& universe(std::size_t max_size) {
  static std::map<std::size_t, std::vector<GTerm>> cache;
  auto it = cache.find(max_size);
  if (it == cache.end()) {
    EnumerateOptions opts;
    opts.max_degree = 5;
    it = cache.emplace(max_size, enumerate_terms(BaseOrder::chain(3), max_size, opts)).first;
  }
  return it->second;
}

auto less_on(const std::vector<GTerm>& terms) {
  return [&terms](std::size_t i, std::size_t j) { return less_g(terms[i], terms[j]); };
}

template <bool Parallel>
void BM_trichotomy(benchmark::State& state) {
  const auto& terms = universe(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::trichotomy(terms.size(), less_on(terms))
                      : kernels::serial::trichotomy(terms.size(), less_on(terms));
    benchmark::DoNotOptimize(v.count);
  }
  state.counters["terms"] = static_cast<double>(terms.size());
}

template <bool Parallel>
void BM_relation_matrix(benchmark::State& state) {
  const auto& terms = universe(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto m = Parallel ? kernels::omp::relation_matrix(terms.size(), less_on(terms))
                      : kernels::serial::relation_matrix(terms.size(), less_on(terms));
    benchmark::DoNotOptimize(m);
  }
  state.counters["terms"] = static_cast<double>(terms.size());
}

template <bool Parallel>
void BM_transitivity(benchmark::State& state) {
  const auto& terms = universe(static_cast<std::size_t>(state.range(0)));
  const auto m = kernels::serial::relation_matrix(terms.size(), less_on(terms));
  for (auto _ : state) {
    auto v = Parallel ? kernels::omp::transitivity(m) : kernels::serial::transitivity(m);
    benchmark::DoNotOptimize(v.count);
  }
  state.counters["terms"] = static_cast<double>(terms.size());
}

}  // namespace

BENCHMARK(BM_trichotomy<false>)->Name("trichotomy/serial")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trichotomy<true>)->Name("trichotomy/omp")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_relation_matrix<false>)->Name("relation_matrix/serial")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_relation_matrix<true>)->Name("relation_matrix/omp")->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transitivity<false>)->Name("transitivity/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_transitivity<true>)->Name("transitivity/omp")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
