#include "geninv/axb.hpp"
#include "geninv/kron.hpp"
#include "geninv/matrix.hpp"
#include "geninv/represent.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace geninv;

namespace {

const Matrix kA{{1, 2, 1}, {0, 1, 0}, {1, 1, 1}};
const Matrix kB{{1, 1}, {1, 1}, {2, 2}};
const Matrix kC{{-3, -3}, {-1, -1}, {-2, -2}};
const Matrix kX1{{-7, 1, 1}, {-1, 0, 0}, {0, 1, 1}};

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  Matrix out(rows, cols);
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) {
      out(i, j) = Gaussian(Rational(mpz_class(num(rng)), mpz_class(den(rng))));
    }
  }
  return out;
}

void BM_RankNormalFormKron(benchmark::State& state) {
  const Matrix K = kronecker(kA, kB.transpose());
  for (auto _ : state) benchmark::DoNotOptimize(rank_normal_form(K));
}
BENCHMARK(BM_RankNormalFormKron);

void BM_RankNormalFormRandom(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix M = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank_normal_form(M));
}
BENCHMARK(BM_RankNormalFormRandom)->Arg(4)->Arg(8)->Arg(16);

void BM_MatMul(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix L = random_matrix(n, n, rng);
  const Matrix R = random_matrix(n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(L * R);
}
BENCHMARK(BM_MatMul)->Arg(4)->Arg(8)->Arg(16);

void BM_SolveViaKron(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_axb_via_kron(kA, kB, kC));
}
BENCHMARK(BM_SolveViaKron);

void BM_PenroseSolution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(penrose_general_solution(kA, kB, kC));
}
BENCHMARK(BM_PenroseSolution);

void BM_RepresentabilityProbe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(representability_probe(kA, kB, kC, kX1));
}
BENCHMARK(BM_RepresentabilityProbe);

}  // namespace

BENCHMARK_MAIN();
