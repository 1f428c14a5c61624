#include "budge/pl.hpp"

namespace budge::pl {

namespace {

// Shared fuel accounting; take() is called before the step happens so an
// exhausted budget never half-applies an instruction.
struct Fuel {
  std::optional<std::uint64_t> remaining;
  std::uint64_t used = 0;

  bool take() {
    if (remaining) {
      if (*remaining == 0) return false;
      --*remaining;
    }
    ++used;
    return true;
  }
};

struct VectorMachine {
  godel::RegisterVector state;
  Fuel fuel;
  Trace* trace;
  std::vector<std::size_t> path;

  void record(StepAction action, const godel::RegisterVector& pre) {
    if (trace) trace->push_back({path, pre, state, action});
  }

  // Returns false on fuel exhaustion.
  bool run(const Sequence& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const Instruction& instr = seq[i];
      path.push_back(i);
      switch (instr.kind) {
        case Instruction::Kind::Incr: {
          if (!fuel.take()) return false;
          godel::RegisterVector pre = state;
          state.increment(instr.reg);
          record(StepAction::Applied, pre);
          break;
        }
        case Instruction::Kind::Decr: {
          if (!fuel.take()) return false;
          godel::RegisterVector pre = state;
          bool applied = state.decrement(instr.reg);
          record(applied ? StepAction::Applied : StepAction::Skipped, pre);
          break;
        }
        case Instruction::Kind::Loop: {
          for (;;) {
            if (!fuel.take()) return false;
            bool positive = state.get(instr.reg) > 0;
            record(positive ? StepAction::LoopEnter : StepAction::LoopExit,
                   state);
            if (!positive) break;
            if (!run(instr.body)) return false;
          }
          break;
        }
      }
      path.pop_back();
    }
    return true;
  }
};

// The literal semantics, written directly against divisibility tests so it
// stays an independent route from the vector machine.
struct GodelMachine {
  godel::BigInt value;
  Fuel fuel;

  bool divisible(std::uint64_t prime) const {
    return mpz_divisible_ui_p(value.get_mpz_t(), prime) != 0;
  }

  bool run(const Sequence& seq) {
    for (const Instruction& instr : seq) {
      std::uint64_t prime = godel::nth_prime(instr.reg);
      switch (instr.kind) {
        case Instruction::Kind::Incr:
          if (!fuel.take()) return false;
          value *= prime;
          break;
        case Instruction::Kind::Decr:
          if (!fuel.take()) return false;
          // i * p^-1 not natural: skip the instruction.
          if (divisible(prime))
            mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), prime);
          break;
        case Instruction::Kind::Loop:
          for (;;) {
            if (!fuel.take()) return false;
            if (!divisible(prime)) break;
            if (!run(instr.body)) return false;
          }
          break;
      }
    }
    return true;
  }
};

}  // namespace

std::string_view to_string(StepAction action) {
  switch (action) {
    case StepAction::Applied:
      return "applied";
    case StepAction::Skipped:
      return "skipped";
    case StepAction::LoopEnter:
      return "loop-enter";
    case StepAction::LoopExit:
      return "loop-exit";
  }
  return "?";
}

VectorResult eval_vector(godel::RegisterVector state, const Sequence& program,
                         const EvalLimit& limit, bool want_trace) {
  VectorResult result;
  VectorMachine machine{std::move(state),
                        Fuel{limit.max_steps},
                        want_trace ? &result.trace : nullptr,
                        {}};
  bool completed = machine.run(program);
  result.state = std::move(machine.state);
  result.out_of_fuel = !completed;
  result.steps = machine.fuel.used;
  return result;
}

GodelResult eval_godel(godel::BigInt value, const Sequence& program,
                       const EvalLimit& limit) {
  GodelMachine machine{std::move(value), Fuel{limit.max_steps}};
  bool completed = machine.run(program);
  return {std::move(machine.value), !completed, machine.fuel.used};
}

std::string format_trace_text(const Sequence& program, const Trace& trace) {
  std::string out;
  std::size_t n = 0;
  for (const TraceStep& step : trace) {
    out += std::to_string(++n);
    out += " [";
    for (std::size_t i = 0; i < step.path.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(step.path[i]);
    }
    out += "] ";
    const Instruction* instr = instruction_at(program, step.path);
    std::string op = "?";
    if (instr) {
      switch (step.action) {
        case StepAction::Applied:
          op = instr->kind == Instruction::Kind::Incr ? "inc" : "dec";
          break;
        case StepAction::Skipped:
          op = "skip";
          break;
        case StepAction::LoopEnter:
          op = "enter";
          break;
        case StepAction::LoopExit:
          op = "exit";
          break;
      }
      op += " r" + std::to_string(instr->reg);
    }
    out += op;
    out += ' ';
    out += godel::encode(step.pre).get_str();
    out += " -> ";
    out += godel::encode(step.post).get_str();
    out += '\n';
  }
  return out;
}

}  // namespace budge::pl
