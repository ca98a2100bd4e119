#include <benchmark/benchmark.h>

#include "veronese/edgewise.hpp"
#include "veronese/kruskal_katona.hpp"
#include "veronese/series.hpp"
#include "veronese/simplicial.hpp"
#include "veronese/sturm.hpp"
#include "veronese/transform.hpp"

namespace {

using veronese::Int;
using veronese::IntPolynomial;

void BM_CMatrix(benchmark::State& state) {
  const long long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(veronese::c_matrix(r, r / 2));
}
BENCHMARK(BM_CMatrix)->Arg(9)->Arg(16)->Arg(32);

void BM_VeroneseH(benchmark::State& state) {
  const IntPolynomial h(std::vector<Int>{1, 3, 5, 5, 3, 1});
  const long long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(veronese::veronese_h(h, 6, r));
}
BENCHMARK(BM_VeroneseH)->Arg(8)->Arg(16)->Arg(64);

void BM_VeroneseByExpansion(benchmark::State& state) {
  const auto series = veronese::make_series(IntPolynomial(std::vector<Int>{1, 3, 5, 5, 3, 1}), 6);
  const long long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(veronese::veronese_by_expansion(series, r));
}
BENCHMARK(BM_VeroneseByExpansion)->Arg(8)->Arg(16);

void BM_RealizeRoundTrip(benchmark::State& state) {
  const IntPolynomial h(std::vector<Int>{1, 5, 5, 5, 5});
  const std::vector<Int> g = veronese::veronese_g(h, 6, state.range(0));
  for (auto _ : state) {
    const veronese::SimplicialComplex c = veronese::revlex_realize(g);
    benchmark::DoNotOptimize(veronese::f_vector(c));
  }
}
BENCHMARK(BM_RealizeRoundTrip)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_Edgewise(benchmark::State& state) {
  const auto base = veronese::SimplicialComplex::from_facets({{1, 2, 3, 4}});
  const long long r = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(veronese::edgewise(base, r));
}
BENCHMARK(BM_Edgewise)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_SturmChain(benchmark::State& state) {
  // (x+1)(x+2)...(x+n): real-rooted with integer coefficients
  const long long n = state.range(0);
  std::vector<Int> p{1};
  for (long long k = 1; k <= n; ++k) {
    std::vector<Int> q(p.size() + 1);
    for (size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i] * k;
      q[i + 1] += p[i];
    }
    p = std::move(q);
  }
  const IntPolynomial poly(p);
  for (auto _ : state) benchmark::DoNotOptimize(veronese::is_real_rooted(poly));
}
BENCHMARK(BM_SturmChain)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
