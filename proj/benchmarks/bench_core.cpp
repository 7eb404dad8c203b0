#include <benchmark/benchmark.h>

#include "bj/classify.hpp"
#include "bj/orthogonality.hpp"
#include "bj/orthograph.hpp"
#include "bj/random.hpp"
#include "bj/svd.hpp"

using namespace bj;

namespace {

// range(0): n, range(1): 0 = M_n(R), 1 = M_n(C)/R, 2 = M_n(H), 3 = M_n(C)/C
SimpleAlgebra algebra_of(const benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  switch (st.range(1)) {
    case 0: return {DivisionAlgebra::R, BaseField::R, n};
    case 1: return {DivisionAlgebra::C, BaseField::R, n};
    case 2: return {DivisionAlgebra::H, BaseField::R, n};
    default: return {DivisionAlgebra::C, BaseField::C, n};
  }
}

void all_algebras(benchmark::internal::Benchmark* b, std::initializer_list<int64_t> sizes) {
  for (int64_t k = 0; k < 4; ++k)
    for (int64_t n : sizes) b->Args({n, k});
  b->ArgNames({"n", "alg"});
}

void BM_Svd(benchmark::State& st) {
  Rng rng(1);
  const KMatrix a = random_matrix(algebra_of(st), rng);
  for (auto _ : st) benchmark::DoNotOptimize(svd(a));
}
BENCHMARK(BM_Svd)->Apply([](auto* b) { all_algebras(b, {2, 4, 8}); });

void BM_IsBjOrthogonal(benchmark::State& st) {
  Rng rng(2);
  const SimpleAlgebra alg = algebra_of(st);
  const KMatrix a = random_with_singular_values(alg, std::vector<double>(alg.n, 1.0), rng);
  const KMatrix b = random_matrix(alg, rng);
  for (auto _ : st) benchmark::DoNotOptimize(is_bj_orthogonal(a, b));
}
BENCHMARK(BM_IsBjOrthogonal)->Apply([](auto* b) { all_algebras(b, {2, 4}); });

void BM_BjMinNorm(benchmark::State& st) {
  Rng rng(3);
  const SimpleAlgebra alg = algebra_of(st);
  const KMatrix a = random_matrix(alg, rng);
  const KMatrix b = random_matrix(alg, rng);
  for (auto _ : st) benchmark::DoNotOptimize(bj_min_norm(a, b));
}
BENCHMARK(BM_BjMinNorm)->Apply([](auto* b) { all_algebras(b, {2, 4}); });

void BM_BuildMaximalChain(benchmark::State& st) {
  Rng rng(4);
  const KMatrix a = random_matrix(algebra_of(st), rng);
  for (auto _ : st) benchmark::DoNotOptimize(build_maximal_chain(a));
}
BENCHMARK(BM_BuildMaximalChain)->Apply([](auto* b) { all_algebras(b, {2, 4}); });

void BM_Classify(benchmark::State& st) {
  const AlgebraSpec spec = AlgebraSpec::simple(algebra_of(st));
  std::uint64_t seed = 0;
  for (auto _ : st) benchmark::DoNotOptimize(classify(spec, 500, ++seed));
}
BENCHMARK(BM_Classify)->Apply([](auto* b) { all_algebras(b, {3}); })->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
