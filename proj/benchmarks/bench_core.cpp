#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "ybrg/coupling.hpp"
#include "ybrg/rgflow.hpp"
#include "ybrg/smatrix.hpp"
#include "ybrg/tensor.hpp"
#include "ybrg/transport.hpp"
#include "ybrg/wavefunction.hpp"

using namespace ybrg;

static void BM_EmbedTwoSite(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec chain(n);
  const TwoSiteOperator s = impurity_smatrix(SMatrixArgs(0.7, 0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed_two_site(s, 1, 0, chain));
  }
}
BENCHMARK(BM_EmbedTwoSite)->DenseRange(1, 6);

static void BM_TransportOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> zs;
  for (int k = 0; k < n; ++k) zs.push_back(0.1 + 0.4 * k);
  const TransportConfig cfg{n, zs, SpectralProfile::linear(0.4, 0.2), 0.6, 1.0,
                            0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(transport_operator(1, cfg));
  }
}
BENCHMARK(BM_TransportOperator)->DenseRange(2, 5);

static void BM_CommutationResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> zs;
  for (int k = 0; k < n; ++k) zs.push_back(0.1 + 0.4 * k);
  const TransportConfig cfg{n, zs, SpectralProfile::linear(0.4, 0.2), 0.6, 1.0,
                            0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(commutation_residual(1, 2, cfg));
  }
}
BENCHMARK(BM_CommutationResidual)->DenseRange(2, 4);

static void BM_ConsistencyResidual(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<double> zs;
  for (int k = 0; k < n; ++k) zs.push_back(0.1 + 0.4 * k);
  const AmplitudeContext ctx{zs, SpectralProfile::linear(0.5, 0.1), 0.6};
  for (auto _ : state) {
    benchmark::DoNotOptimize(consistency_residual(ctx));
  }
}
BENCHMARK(BM_ConsistencyResidual)->DenseRange(2, 3);

static void BM_CouplingsRoundTrip(benchmark::State& state) {
  for (auto _ : state) {
    const CouplingPair pair = couplings_from_spectral(0.5, 1.7);
    benchmark::DoNotOptimize(spectral_from_couplings(pair));
  }
}
BENCHMARK(BM_CouplingsRoundTrip);

static void BM_IntegrateRg(benchmark::State& state) {
  const double u = 0.5;
  const double a = -2.0 * u / M_PI;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_rg({0.3, 0.1}, 0.0, 10.0, static_cast<int>(state.range(0)),
                     a, u));
  }
}
BENCHMARK(BM_IntegrateRg)->Arg(1000)->Arg(10000);

BENCHMARK_MAIN();
