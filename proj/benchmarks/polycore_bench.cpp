#include <benchmark/benchmark.h>

#include "cremona/builtins.hpp"
#include "cremona/gcd.hpp"
#include "cremona/polytext.hpp"
#include "cremona/projmap.hpp"
#include "cremona/squarefree.hpp"

using namespace cremona;

namespace {

const Field Q = Field::rationals();

void BM_Gcd(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  MultiPoly c = parse_poly("x0^2-3*x1*x2+x2^2+1", Q, 3).pow(k);
  MultiPoly a = c * parse_poly("x0*x1+x2^3-2", Q, 3), b = c * parse_poly("x1^2-x0*x2+5", Q, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->DenseRange(1, 4);

void BM_SquarefreeJacobian(benchmark::State& state) {
  MultiPoly j = jacobian(builtin("g", static_cast<std::size_t>(state.range(0))).map);
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_decompose(j));
}
BENCHMARK(BM_SquarefreeJacobian)->DenseRange(2, 5);

void BM_SquareRoot(benchmark::State& state) {
  MultiPoly h = parse_poly("x0*x1-x2^2+3*x1*x3", Q, 4).pow(static_cast<unsigned>(state.range(0)));
  MultiPoly f = h * h;
  for (auto _ : state) benchmark::DoNotOptimize(square_root_up_to_scalar(f));
}
BENCHMARK(BM_SquareRoot)->DenseRange(1, 6);

}  // namespace

BENCHMARK_MAIN();
