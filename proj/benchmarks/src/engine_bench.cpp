#include <benchmark/benchmark.h>

#include "k3lat/cone.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/named_lattices.hpp"

namespace {

using namespace k3lat;

OmegaParams omega_params(int g) {
  OmegaParams p;
  p.g = g;
  p.d.fill(3);
  p.d[7] = 1;
  return p;
}

// Roots of degree up to K on Omega_g; the window widens quadratically with K.
void BM_EnumerateRoots(benchmark::State& state) {
  const auto lat = build_omega(omega_params(11));
  const auto l = omega_reference(lat);
  const Integer k = state.range(0);
  std::size_t found = 0;
  for (auto _ : state) {
    const auto res = enumerate_by_square_and_degree({l, -2, 0, k});
    found = res.classes.size();
    benchmark::DoNotOptimize(found);
  }
  state.counters["classes"] = static_cast<double>(found);
}
BENCHMARK(BM_EnumerateRoots)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_IsEffective(benchmark::State& state) {
  const auto lat = build_omega(omega_params(static_cast<int>(state.range(0))));
  const auto l = omega_reference(lat);
  const auto ctx = PolarizedContext::make(l, PolarizationStatus::Ample);
  const auto e = DivisorClass::basis(lat, "E");
  const auto target = l - Integer(2) * e;
  for (auto _ : state) benchmark::DoNotOptimize(is_effective(ctx, target).verdict);
}
BENCHMARK(BM_IsEffective)->Arg(11)->Arg(13)->Arg(15)->Arg(17);

void BM_CliffordIndex(benchmark::State& state) {
  const auto lat = build_omega(omega_params(static_cast<int>(state.range(0))));
  const auto l = omega_reference(lat);
  const auto ctx = PolarizedContext::make(l, PolarizationStatus::Ample);
  for (auto _ : state) benchmark::DoNotOptimize(clifford_index(ctx, l).value);
}
BENCHMARK(BM_CliffordIndex)->Arg(11)->Arg(13)->Arg(15)->Arg(17)->Unit(benchmark::kMillisecond);

void BM_NefReduce(benchmark::State& state) {
  const auto lat = build_omega(omega_params(11));
  const auto l = omega_reference(lat);
  const auto g1 = DivisorClass::basis(lat, "G1");
  const auto start = reflect(l, g1);
  for (auto _ : state) benchmark::DoNotOptimize(nef_reduce(start, l).result);
}
BENCHMARK(BM_NefReduce);

}  // namespace

BENCHMARK_MAIN();
