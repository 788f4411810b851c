#include <benchmark/benchmark.h>

#include <random>

#include "ordsel/oracle.hpp"
#include "ordsel/selectivity.hpp"

using namespace ordsel;

namespace {

const ZPoly kCyclicCubic{Int(-1), Int(-2), Int(1), Int(1)};

QMat scaled_power_basis(unsigned p, long c) {
    QMat m(p, std::vector<Rat>(p, Rat(0)));
    Int ck = 1;
    for (unsigned k = 0; k < p; ++k) {
        m[k][k] = Rat(ck);
        ck *= c;
    }
    return m;
}

} // namespace

static void BM_HilbertSymbolOdd(benchmark::State& state) {
    Place p = Place::finite(Int(101));
    for (auto _ : state) {
        int s = hilbert_symbol(Int(-3030), Int(7777), p);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_HilbertSymbolOdd);

static void BM_HilbertSymbolDyadic(benchmark::State& state) {
    Place two = Place::finite(Int(2));
    for (auto _ : state) {
        int s = hilbert_symbol(Int(-1048569), Int(123456), two);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_HilbertSymbolDyadic);

static void BM_RamifiedSet(benchmark::State& state) {
    for (auto _ : state) {
        auto r = ramified_set(QuatAlg::symbol(Int(-30), Int(77)));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RamifiedSet);

static void BM_FactorSemiprime(benchmark::State& state) {
    Int n = Int("2305843009213693951") * 3; // (2^61 - 1) * 3
    for (auto _ : state) {
        Factorization f = factor(n);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_FactorSemiprime);

static void BM_Hnf(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto n = static_cast<std::size_t>(state.range(0));
    QMat m(n, std::vector<Rat>(n));
    for (auto& row : m)
        for (auto& e : row) e = Rat(static_cast<long>(rng() % 2001) - 1000);
    for (auto _ : state) {
        Lattice l = hnf(m);
        benchmark::DoNotOptimize(l);
    }
}
BENCHMARK(BM_Hnf)->Arg(3)->Arg(5)->Arg(7);

static void BM_IntersectAndIndex(benchmark::State& state) {
    NumField L = make_field(kCyclicCubic);
    auto sigma = find_automorphism(L);
    OrderLat h = make_order(L, scaled_power_basis(3, 14));
    OrderLat img = apply_aut(h, *sigma);
    for (auto _ : state) {
        Int idx = order_index(h, intersect(h.lat, img.lat));
        benchmark::DoNotOptimize(idx);
    }
}
BENCHMARK(BM_IntersectAndIndex);

static void BM_FindAutomorphismCubic(benchmark::State& state) {
    NumField L = make_field(kCyclicCubic);
    for (auto _ : state) {
        auto s = find_automorphism(L);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_FindAutomorphismCubic);

static void BM_FindAutomorphismQuintic(benchmark::State& state) {
    NumField L = make_field(ZPoly{Int(1), Int(3), Int(-3), Int(-4), Int(1), Int(1)});
    for (auto _ : state) {
        auto s = find_automorphism(L);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_FindAutomorphismQuintic);

static void BM_DecideQuadratic(benchmark::State& state) {
    QuatAlg A = QuatAlg::ramset({Int(2)}, true);
    for (auto _ : state) {
        Verdict v = decide_quadratic(Int(-1), A);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DecideQuadratic);

static void BM_DecideOdd(benchmark::State& state) {
    NumField L = make_field(kCyclicCubic);
    OrderLat h = make_order(L, scaled_power_basis(3, 14));
    std::set<Int> S{Int(2), Int(7)};
    for (auto _ : state) {
        Verdict v = decide_odd(L, h, S);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_DecideOdd);

static void BM_OracleHilbert(benchmark::State& state) {
    for (auto _ : state) {
        int s = oracle::hilbert_bruteforce(Int(-30), Int(77), Int(7), 5);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_OracleHilbert);

BENCHMARK_MAIN();
