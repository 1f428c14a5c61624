#include <benchmark/benchmark.h>

#include "budge/bridge.hpp"
#include "budge/godel.hpp"
#include "budge/pl.hpp"
#include "budge/tp.hpp"

namespace pl = budge::pl;
namespace tp = budge::tp;
namespace bridge = budge::bridge;
using budge::godel::RegisterVector;

namespace {

constexpr std::string_view kMiuScript =
    "rTmM : M\n"
    "rTmI : I\n"
    "rTmU : U\n"
    "tmM! : rTmM\n"
    "tmI! : rTmI\n"
    "tmU! : rTmU\n"
    "rTmxy : xy\n"
    "rMI : |- MI\n"
    "thMI : rMI\n"
    "r1 : |- xI -> |- xIU\n"
    "r2 : |- Mx -> |- Mxx\n"
    "r3 : |- xIIIy -> |- xUy\n"
    "thMII : r2 x=tmI! thMI\n"
    "tmII! : rTmxy x=tmI!;y=tmI!\n"
    "thMIIII : r2 x=tmII! thMII\n"
    "thMUI : r3 x=tmM!;y=tmI! thMIIII\n";

void BM_NthPrime(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(budge::godel::nth_prime(std::size_t(state.range(0))));
}
BENCHMARK(BM_NthPrime)->Arg(100)->Arg(1000)->Arg(5000);

void BM_EncodeDecodeRoundTrip(benchmark::State& state) {
  RegisterVector v(std::vector<std::uint64_t>{4, 1, 0, 3, 2, 5});
  for (auto _ : state)
    benchmark::DoNotOptimize(budge::godel::decode(budge::godel::encode(v)));
}
BENCHMARK(BM_EncodeDecodeRoundTrip);

void BM_ParseDiv(benchmark::State& state) {
  std::string text = pl::print_program(pl::stdlib().div);
  for (auto _ : state) benchmark::DoNotOptimize(pl::parse_program(text));
}
BENCHMARK(BM_ParseDiv);

void BM_EvalVectorMul(benchmark::State& state) {
  const pl::Sequence& mul = pl::stdlib().mul;
  std::uint64_t n = std::uint64_t(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(pl::eval_vector(RegisterVector({n, n}), mul,
                                             pl::EvalLimit::unbounded()));
}
BENCHMARK(BM_EvalVectorMul)->Arg(5)->Arg(10)->Arg(20);

void BM_EvalGodelMul(benchmark::State& state) {
  const pl::Sequence& mul = pl::stdlib().mul;
  std::uint64_t n = std::uint64_t(state.range(0));
  for (auto _ : state) {
    budge::godel::BigInt start = budge::godel::encode(RegisterVector({n, n}));
    benchmark::DoNotOptimize(
        pl::eval_godel(start, mul, pl::EvalLimit::unbounded()));
  }
}
BENCHMARK(BM_EvalGodelMul)->Arg(5)->Arg(10)->Arg(20);

void BM_CheckMiu(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tp::check_script(kMiuScript));
}
BENCHMARK(BM_CheckMiu);

void BM_BridgeAdditionProof(benchmark::State& state) {
  bridge::Program program =
      bridge::lower_program(pl::parse_program("((2,-2,1))"));
  std::uint64_t r2 = std::uint64_t(state.range(0));
  for (auto _ : state) {
    bridge::ProofPlan plan = bridge::generate_proof(
        program, 1, r2, pl::EvalLimit::bounded(pl::kDefaultMaxSteps));
    benchmark::DoNotOptimize(tp::check_script(plan.script));
  }
}
BENCHMARK(BM_BridgeAdditionProof)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
