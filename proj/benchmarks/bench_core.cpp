#include "agclcp/agcode.hpp"
#include "agclcp/runner.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace agclcp;

static Matrix random_matrix(const FieldPtr& f, size_t rows, size_t cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<uint32_t> pick(0, f->q() - 1);
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = f->element(pick(rng));
    return m;
}

static void BM_rref_gf16(benchmark::State& state) {
    FieldPtr f = Field::make(2, 4);
    Matrix m = random_matrix(f, 12, 24, 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_gf16);

static void BM_min_distance(benchmark::State& state) {
    FieldPtr f = Field::make(2, 2);
    Matrix m = random_matrix(f, 6, 12, 11);
    LinearCode c = LinearCode::from_rows(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(min_distance(c));
}
BENCHMARK(BM_min_distance);

static void BM_group_law_scalar_mul(benchmark::State& state) {
    F8Fixture fx = f8_fixture();
    for (auto _ : state)
        benchmark::DoNotOptimize(scalar_mul(fx.curve, 1000003, fx.plus[3]).is_infinity());
}
BENCHMARK(BM_group_law_scalar_mul);

static void BM_rr_basis_f4(benchmark::State& state) {
    F4Fixture fx = f4_fixture();
    Divisor g(fx.curve);
    g.add(fx.O, 6).add(fx.Q, -2);
    for (auto _ : state)
        benchmark::DoNotOptimize(rr_basis(fx.curve, g).size());
}
BENCHMARK(BM_rr_basis_f4);

static void BM_point_enumeration_gf16(benchmark::State& state) {
    FieldPtr f = Field::make(2, 4);
    Curve cv = Curve::elliptic(f, f->one(), f->one(), f->zero());
    for (auto _ : state)
        benchmark::DoNotOptimize(rational_points(cv).size());
}
BENCHMARK(BM_point_enumeration_gf16);

static void BM_examples_elliptic_f4(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cmd_examples("elliptic-f4").dump().size());
}
BENCHMARK(BM_examples_elliptic_f4);

BENCHMARK_MAIN();
