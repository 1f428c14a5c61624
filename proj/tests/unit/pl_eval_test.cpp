#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/generators.hpp"
#include "budge/pl.hpp"

using namespace budge::pl;
using budge::godel::BigInt;
using budge::godel::RegisterVector;
using budge::godel::encode;

namespace {
const EvalLimit kBudget = EvalLimit::bounded(kDefaultMaxSteps);
}

TEST_CASE("addition on the vector machine") {
  VectorResult r = eval_vector(RegisterVector({3, 3}),
                               parse_program("((2,-2,1))"), kBudget);
  CHECK_FALSE(r.out_of_fuel);
  CHECK(r.state == RegisterVector({6}));
}

TEST_CASE("addition on the literal machine") {
  GodelResult r = eval_godel(216, parse_program("((2,-2,1))"), kBudget);
  CHECK_FALSE(r.out_of_fuel);
  CHECK(r.value == 64);
}

TEST_CASE("decrement of a zero register is skipped") {
  VectorResult r = eval_vector(RegisterVector(), parse_program("(-1)"), kBudget,
                               true);
  CHECK_FALSE(r.out_of_fuel);
  CHECK(r.state == RegisterVector());
  REQUIRE(r.trace.size() == 1);
  CHECK(r.trace[0].action == StepAction::Skipped);

  CHECK(eval_godel(1, parse_program("(-1)"), kBudget).value == 1);
}

TEST_CASE("empty sequence returns the state unchanged") {
  CHECK(eval_vector(RegisterVector({2, 1}), {}, kBudget).state ==
        RegisterVector({2, 1}));
  CHECK(eval_godel(1, {}, kBudget).value == 1);
  CHECK(eval_godel(2250, {}, kBudget).value == 2250);
}

TEST_CASE("moving register 3 onto register 1") {
  // 2250 = 2^1 * 3^2 * 5^3; draining r3 into r1 gives 2^4 * 3^2 = 144.
  GodelResult r = eval_godel(2250, parse_program("((3,-3,1))"), kBudget);
  CHECK(r.value == 144);
  VectorResult v = eval_vector(RegisterVector({1, 2, 3}),
                               parse_program("((3,-3,1))"), kBudget);
  CHECK(v.state == RegisterVector({4, 2}));
  CHECK(encode(v.state) == r.value);
}

TEST_CASE("both engines exhaust the budget identically") {
  Sequence diverging = parse_program("(1,(1,1))");
  VectorResult v =
      eval_vector(RegisterVector(), diverging, EvalLimit::bounded(100));
  GodelResult g = eval_godel(1, diverging, EvalLimit::bounded(100));
  CHECK(v.out_of_fuel);
  CHECK(g.out_of_fuel);
  CHECK(v.steps == 100);
  CHECK(g.steps == 100);
}

TEST_CASE("unbounded evaluation of a terminating program") {
  VectorResult r = eval_vector(RegisterVector({5}), parse_program("((1,-1,2))"),
                               EvalLimit::unbounded());
  CHECK_FALSE(r.out_of_fuel);
  CHECK(r.state == RegisterVector({0, 5}));
}

TEST_CASE("trace steps chain and are deterministic") {
  testsupport::Rng rng(0x7ace);
  for (int i = 0; i < 50; ++i) {
    Sequence program = testsupport::gen_program(rng);
    RegisterVector start = testsupport::gen_state(rng);
    EvalLimit limit = EvalLimit::bounded(2000);

    VectorResult a = eval_vector(start, program, limit, true);
    VectorResult b = eval_vector(start, program, limit, true);
    CHECK(a.trace == b.trace);
    CHECK(a.steps == b.steps);

    const RegisterVector* previous = &start;
    for (const TraceStep& step : a.trace) {
      CHECK(step.pre == *previous);
      previous = &step.post;
    }
    if (!a.trace.empty() && !a.out_of_fuel)
      CHECK(a.trace.back().post == a.state);
  }
}

TEST_CASE("vector and literal engines agree on random programs") {
  testsupport::Rng rng(0xd1ff);
  for (int i = 0; i < 100; ++i) {
    Sequence program = testsupport::gen_program(rng);
    RegisterVector start = testsupport::gen_state(rng);
    EvalLimit limit = EvalLimit::bounded(5000);

    VectorResult v = eval_vector(start, program, limit);
    GodelResult g = eval_godel(encode(start), program, limit);
    CHECK(v.out_of_fuel == g.out_of_fuel);
    if (!v.out_of_fuel) CHECK(encode(v.state) == g.value);
  }
}

TEST_CASE("composition law on random programs") {
  testsupport::Rng rng(0xc0de);
  int checked = 0;
  while (checked < 60) {
    Sequence s1 = testsupport::gen_program(rng);
    Sequence s2 = testsupport::gen_program(rng);
    RegisterVector start = testsupport::gen_state(rng);
    EvalLimit limit = EvalLimit::bounded(5000);

    VectorResult first = eval_vector(start, s1, limit);
    if (first.out_of_fuel) continue;
    VectorResult second = eval_vector(first.state, s2, limit);
    if (second.out_of_fuel) continue;
    VectorResult both = eval_vector(start, compose(s1, s2),
                                    EvalLimit::bounded(10000));
    REQUIRE_FALSE(both.out_of_fuel);
    CHECK(both.state == second.state);
    ++checked;
  }
}

TEST_CASE("golden addition trace text") {
  VectorResult r = eval_vector(RegisterVector({3, 3}),
                               parse_program("((2,-2,1))"), kBudget, true);
  CHECK(format_trace_text(parse_program("((2,-2,1))"), r.trace) ==
        testsupport::kAdditionTraceGolden);
}

TEST_CASE("out-of-fuel results carry the partial trace") {
  VectorResult r = eval_vector(RegisterVector({1}), parse_program("(1,(1,1))"),
                               EvalLimit::bounded(7), true);
  CHECK(r.out_of_fuel);
  CHECK(r.trace.size() == 7);
}
