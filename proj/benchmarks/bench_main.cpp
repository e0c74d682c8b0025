#include <compbal/compbal.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace compbal;

namespace {

void BM_polynomial_table(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 3});
  const auto n = state.range(0);
  for (auto _ : state) {
    auto table = polynomial_table(s, n);
    benchmark::DoNotOptimize(table);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_polynomial_table)->Range(64, 1024)->Complexity();

void BM_total_count(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 2, 3});
  for (auto _ : state) {
    auto total = total_count(s, state.range(0));
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_total_count)->Range(256, 16384);

void BM_residue_quotient_ring(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 3});
  for (auto _ : state) {
    auto dist = residue_counts(s, state.range(0), 5, ResidueMethod::quotient_ring);
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_residue_quotient_ring)->Range(256, 4096);

void BM_residue_direct(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 3});
  for (auto _ : state) {
    auto dist = residue_counts(s, state.range(0), 5, ResidueMethod::direct);
    benchmark::DoNotOptimize(dist);
  }
}
BENCHMARK(BM_residue_direct)->Range(256, 1024);

void BM_modulus_gap(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 2, 3});
  for (auto _ : state) {
    auto report = modulus_gap(s, state.range(0));
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_modulus_gap)->DenseRange(2, 6, 2);

void BM_sturm_real_rooted(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 3});
  const auto poly = polynomial_table(s, state.range(0)).back();
  for (auto _ : state) {
    auto report = real_rooted(poly);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_sturm_real_rooted)->DenseRange(30, 90, 30);

void BM_minimal_recurrence(benchmark::State& state) {
  const PartSet s = validate_part_set({2, 3, 5, 7, 10});
  std::vector<BigInt> seq;
  for (std::int64_t n = 0; n < state.range(0); ++n) seq.push_back(total_count(s, n));
  for (auto _ : state) {
    auto fit = minimal_recurrence(seq);
    benchmark::DoNotOptimize(fit);
  }
}
BENCHMARK(BM_minimal_recurrence)->Range(32, 256);

void BM_brute_force_oracle(benchmark::State& state) {
  const PartSet s = validate_part_set({1, 2});
  for (auto _ : state) {
    auto poly = brute_force_polynomial(s, state.range(0));
    benchmark::DoNotOptimize(poly);
  }
}
BENCHMARK(BM_brute_force_oracle)->DenseRange(12, 24, 4);

}  // namespace
