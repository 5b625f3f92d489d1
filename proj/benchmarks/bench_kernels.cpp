#include <benchmark/benchmark.h>

#include "jordan/checks.hpp"
#include "jordan/lattice.hpp"
#include "jordan/linalg.hpp"
#include "jordan/sampling.hpp"
#include "jordan/symmetry.hpp"

using namespace jordan;

namespace {

Algebra matrix_algebra(const benchmark::State& state) {
  return Algebra::matrix(static_cast<Ring>(state.range(0)), static_cast<int>(state.range(1)));
}

void BM_SymEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m(i, j) = m(j, i) = rng.gaussian();
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigen(m));
}
BENCHMARK(BM_SymEigen)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_SpectralDecompose(benchmark::State& state) {
  const Algebra alg = matrix_algebra(state);
  Rng rng(2);
  const Element a = random_element(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
  state.SetLabel(alg.name());
}
BENCHMARK(BM_SpectralDecompose)->ArgsProduct({{0, 1, 2}, {2, 3, 5}});

void BM_Meet(benchmark::State& state) {
  const Algebra alg = matrix_algebra(state);
  Rng rng(3);
  const Projection p = certify_projection(random_projection(alg, rng));
  const Projection q = certify_projection(random_projection(alg, rng));
  for (auto _ : state) benchmark::DoNotOptimize(meet(p, q));
  state.SetLabel(alg.name());
}
BENCHMARK(BM_Meet)->ArgsProduct({{0, 1, 2}, {2, 3, 5}});

void BM_SpinSpectral(benchmark::State& state) {
  const Algebra alg = Algebra::spin(static_cast<int>(state.range(0)));
  Rng rng(4);
  const Element a = random_element(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decompose(a));
}
BENCHMARK(BM_SpinSpectral)->Arg(3)->Arg(7)->Arg(31);

void BM_TransportAutomorphism(benchmark::State& state) {
  const Algebra alg = Algebra::matrix(Ring::Complex, static_cast<int>(state.range(0)));
  Rng rng(5);
  const Element e1 = random_atom(alg, rng);
  const Element e2 = random_atom(alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(transport_automorphism(e1, e2));
}
BENCHMARK(BM_TransportAutomorphism)->Arg(2)->Arg(4);

void BM_GbitCheck(benchmark::State& state) {
  const Algebra alg = Algebra::matrix(Ring::Complex, 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_gbit(alg, 50, 1));
}
BENCHMARK(BM_GbitCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
