#include <benchmark/benchmark.h>

#include "valex/invariants.hpp"
#include "valex/repsearch.hpp"

using namespace valex;

namespace {

const char* kBraid445 = "k=4 b2 b3 B1 v2 v1 b1 v1 v2 v3";
const char* kPres498 =
    "gens a b\n"
    "rel q^-2 a^-1 s b a q^4 s^-3 a s^4 q^-4 a^-1 b^-1 s^-1 a q^2 s^-1 b^-1\n"
    "rel a^-1 s b a q^2 s^-2 a^-1 s^3 q^-4 a^-1 s b a q^4 s^-3 a s^2 q^-2 a^-1 b^-1 s^-2\n";
const char* kRep498 = "p = 2\nn = 2\na = [[0,1],[1,0]]\nb = [[1,0],[1,1]]\ns = [[1,0],[0,1]]\nq = [[1,0],[0,1]]\n";

PolyMatrix burau_shifted(const BraidWord& b) {
    return burau(b) - PolyMatrix::identity(b.strands, CoeffRing::integers());
}

}  // namespace

static void BM_BurauProduct(benchmark::State& state) {
    BraidWord b = BraidWord::parse(kBraid445);
    for (auto _ : state) benchmark::DoNotOptimize(burau(b));
}
BENCHMARK(BM_BurauProduct);

static void BM_DetCofactor(benchmark::State& state) {
    PolyMatrix m = burau_shifted(BraidWord::parse(kBraid445));
    for (auto _ : state) benchmark::DoNotOptimize(det(m, DetKernel::Cofactor));
}
BENCHMARK(BM_DetCofactor);

static void BM_DetFractionFree(benchmark::State& state) {
    PolyMatrix m = burau_shifted(BraidWord::parse(kBraid445));
    for (auto _ : state) benchmark::DoNotOptimize(det(m, DetKernel::FractionFree));
}
BENCHMARK(BM_DetFractionFree);

static void BM_FundamentalAction(benchmark::State& state) {
    BraidWord b = BraidWord::parse(kBraid445);
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_action_all(b));
}
BENCHMARK(BM_FundamentalAction);

static void BM_DeltaEllPresentation(benchmark::State& state) {
    Presentation p = closure_presentation(BraidWord::parse(kBraid445));
    for (auto _ : state) benchmark::DoNotOptimize(delta_ell(p, 1));
}
BENCHMARK(BM_DeltaEllPresentation);

static void BM_GcdMinorChain(benchmark::State& state) {
    LaurentPoly d = LaurentPoly::parse("q - s") * LaurentPoly::parse("1 - s*t") * LaurentPoly::parse("1 - t*q");
    std::vector<LaurentPoly> minors{
        LaurentPoly::parse("t - 1") * d,
        LaurentPoly::parse("s - 1") * d,
        LaurentPoly::parse("1 - q") * d,
    };
    for (auto _ : state) benchmark::DoNotOptimize(gcd_many(minors));
}
BENCHMARK(BM_GcdMinorChain);

static void BM_TwistedH498(benchmark::State& state) {
    Presentation p = Presentation::parse(kPres498);
    Representation rho = Representation::parse(kRep498);
    for (auto _ : state) benchmark::DoNotOptimize(twisted_h(p, rho));
}
BENCHMARK(BM_TwistedH498);

static void BM_RepSearch34(benchmark::State& state) {
    Presentation p = Presentation::parse(
        "gens a\n"
        "rel a^-1 q s^-2 a^-1 s^-1 a^-1 s^2 q^-3 a^-1 q^2 s^-2 a s^3 q^-2 a q^3 s^-2 a s a s q^-1\n");
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_reps(p, RepSearchTarget{2, 2, true}));
}
BENCHMARK(BM_RepSearch34);

BENCHMARK_MAIN();
