// Serial reference kernels against their OpenMP counterparts on identical inputs.
#include <random>

#include <benchmark/benchmark.h>

#include "gpade/acceptance.hpp"
#include "gpade/derivation.hpp"
#include "gpade/poly.hpp"

using namespace gpade;

namespace {

Poly random_poly(std::mt19937_64& rng, std::size_t degree)
{
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) {
        x = make_rational(Integer(num(rng)), Integer(den(rng)));
    }
    return Poly(std::move(c));
}

std::vector<std::vector<Poly>> random_matrix(std::size_t n, std::size_t degree)
{
    std::mt19937_64 rng(7);
    std::vector<std::vector<Poly>> M(n, std::vector<Poly>(n));
    for (auto& row : M) {
        for (auto& e : row) {
            e = random_poly(rng, degree);
        }
    }
    return M;
}

void BM_mul_serial(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const auto deg = static_cast<std::size_t>(state.range(0));
    const Poly a = random_poly(rng, deg);
    const Poly b = random_poly(rng, deg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_serial(a, b));
    }
}

void BM_mul_parallel(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const auto deg = static_cast<std::size_t>(state.range(0));
    const Poly a = random_poly(rng, deg);
    const Poly b = random_poly(rng, deg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_parallel(a, b));
    }
}

void BM_det_serial(benchmark::State& state)
{
    const auto M = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_poly_serial(M));
    }
}

void BM_det_parallel(benchmark::State& state)
{
    const auto M = random_matrix(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(det_poly_parallel(M));
    }
}

void BM_grid_serial(benchmark::State& state)
{
    const auto grid = acceptance_grid(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_grid_serial(grid));
    }
}

void BM_grid_parallel(benchmark::State& state)
{
    const auto grid = acceptance_grid(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_grid_parallel(grid));
    }
}

} // namespace

BENCHMARK(BM_mul_serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_mul_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_det_serial)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_det_parallel)->Arg(3)->Arg(4)->Arg(5);
BENCHMARK(BM_grid_serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_parallel)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
