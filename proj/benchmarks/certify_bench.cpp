#include <benchmark/benchmark.h>

#include "cremona/builtins.hpp"
#include "cremona/certify.hpp"
#include "cremona/gnword.hpp"
#include "cremona/monomial_map.hpp"

using namespace cremona;

namespace {

const Field Q = Field::rationals();

void BM_ComposeSigma(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ProjMap g = builtin("g", n).map;
  ProjMap s = sigma_map(Q, n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(g, s));
}
BENCHMARK(BM_ComposeSigma)->DenseRange(3, 6);

void BM_EvalChi0(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  GnWord w = builtin("chi0", n).word->flatten(n, Q);
  for (auto _ : state) benchmark::DoNotOptimize(eval_word(w));
}
BENCHMARK(BM_EvalChi0)->DenseRange(3, 5);

void BM_CertifyXi(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  MonomialMap m = MonomialMap::from_matrix(Q, IntMatrix::elementary(n, 1, 0, 1));
  for (auto _ : state) {
    Certifier cert(n, Q);
    benchmark::DoNotOptimize(cert.certify_monomial(m));
  }
}
BENCHMARK(BM_CertifyXi)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_CertifyDolgachev(benchmark::State& state) {
  MonomialMap m = *from_projective(builtin("dolgachev", 5).map);
  for (auto _ : state) {
    Certifier cert(5, Q);
    benchmark::DoNotOptimize(cert.certify_monomial(m));
  }
}
BENCHMARK(BM_CertifyDolgachev)->Unit(benchmark::kMillisecond);

void BM_VerifyNagata(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_nagata());
}
BENCHMARK(BM_VerifyNagata)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
