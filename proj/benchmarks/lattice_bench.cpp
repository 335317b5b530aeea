#include <benchmark/benchmark.h>

#include <cstdint>

#include "bivalence/lattice.hpp"

namespace {

using namespace bivalence;

void BM_BuildBoolean(benchmark::State& state) {
  const LatticeSpec spec = builtin(Family::Boolean, static_cast<unsigned>(state.range(0))).to_spec();
  for (auto _ : state) benchmark::DoNotOptimize(build_from_order(spec));
  state.SetComplexityN(static_cast<std::int64_t>(spec.elements.size()));
}
BENCHMARK(BM_BuildBoolean)->DenseRange(2, 7)->Complexity();

void BM_BuildChain(benchmark::State& state) {
  const LatticeSpec spec = builtin(Family::Chain, static_cast<unsigned>(state.range(0))).to_spec();
  for (auto _ : state) benchmark::DoNotOptimize(build_from_order(spec));
  state.SetComplexityN(static_cast<std::int64_t>(spec.elements.size()));
}
BENCHMARK(BM_BuildChain)->RangeMultiplier(2)->Range(8, 256)->Complexity();

// The triple laws make this cubic in the number of elements.
void BM_VerifyAxioms(benchmark::State& state) {
  const Lattice l = builtin(Family::Boolean, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(l));
  state.SetComplexityN(static_cast<std::int64_t>(l.size()));
}
BENCHMARK(BM_VerifyAxioms)->DenseRange(2, 6)->Complexity(benchmark::oNCubed);

void BM_VerifyLantern(benchmark::State& state) {
  const Lattice l = builtin(Family::Lantern, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_axioms(l));
}
BENCHMARK(BM_VerifyLantern)->RangeMultiplier(2)->Range(2, 32);

} // namespace
