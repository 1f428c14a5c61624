#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "budge/godel.hpp"

namespace budge::pl {

struct Instruction;

/// A Budge-PL program: an ordered list of statements.
using Sequence = std::vector<Instruction>;

// One statement. A positive literal increments a register, a negative one
// decrements it (skipping when the register is already 0), and a
// parenthesized group loops its body while the head register is nonzero.
struct Instruction {
  enum class Kind { Incr, Decr, Loop };

  Kind kind{Kind::Incr};
  std::uint64_t reg{1};  // 1-based, never 0
  Sequence body;         // Loop only

  static Instruction incr(std::uint64_t r) { return {Kind::Incr, r, {}}; }
  static Instruction decr(std::uint64_t r) { return {Kind::Decr, r, {}}; }
  static Instruction loop(std::uint64_t r, Sequence b) {
    return {Kind::Loop, r, std::move(b)};
  }

  bool operator==(const Instruction&) const = default;
};

class ParseError final : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses a program. Whitespace between tokens is tolerated, `#` starts a
/// comment running to end of line. Throws ParseError with line/column.
Sequence parse_program(std::string_view text);

/// Canonical text: no whitespace, comma separated. Inverse of parse_program
/// on canonical input.
std::string print_program(const Sequence& program);

/// C-like rendering, one statement per line, loops as nested while blocks.
std::string pseudocode(const Sequence& program);

/// Concatenates the top-level statement lists.
Sequence compose(Sequence first, const Sequence& second);

// Step budget making the (potentially divergent) interpreter total. One step
// is one increment/decrement visit or one loop-guard test.
struct EvalLimit {
  std::optional<std::uint64_t> max_steps;

  static EvalLimit bounded(std::uint64_t steps) { return {steps}; }
  static EvalLimit unbounded() { return {std::nullopt}; }
};

inline constexpr std::uint64_t kDefaultMaxSteps = 1'000'000;

enum class StepAction { Applied, Skipped, LoopEnter, LoopExit };

std::string_view to_string(StepAction action);

// One evaluation event. The path addresses the instruction by index within
// nested bodies ([0,1] = second statement of the first top-level loop), so
// it is stable across pretty-printing. Guard tests have pre == post.
struct TraceStep {
  std::vector<std::size_t> path;
  godel::RegisterVector pre;
  godel::RegisterVector post;
  StepAction action;

  bool operator==(const TraceStep&) const = default;
};

using Trace = std::vector<TraceStep>;

/// Resolves a trace path back to its instruction (nullptr if out of range).
const Instruction* instruction_at(const Sequence& program,
                                  std::span<const std::size_t> path);

struct VectorResult {
  godel::RegisterVector state;  // final, or the partial state at fuel exhaustion
  bool out_of_fuel = false;
  std::uint64_t steps = 0;
  Trace trace;  // populated only when tracing was requested
};

/// Evaluates on the exponent-vector view of the state.
VectorResult eval_vector(godel::RegisterVector state, const Sequence& program,
                         const EvalLimit& limit, bool want_trace = false);

struct GodelResult {
  godel::BigInt value;
  bool out_of_fuel = false;
  std::uint64_t steps = 0;
};

/// Literal semantics: multiplies/divides the Godel number itself and drives
/// skips and loop guards by divisibility tests. Oracle for eval_vector.
GodelResult eval_godel(godel::BigInt value, const Sequence& program,
                       const EvalLimit& limit);

/// One line per trace step: "<n> [<path>] <op> r<K> <pre> -> <post>" with
/// pre/post as Godel numbers.
std::string format_trace_text(const Sequence& program, const Trace& trace);

// The arithmetic programs shipped with the language. div is spliced together
// from its fragments around sub, the splice landing inside the main loop.
struct StdLib {
  Sequence add;  // ((2,-2,1)) : r1 += r2, r2 = 0
  Sequence sub;  // r1 = |x-y|, r2 = 1 if y > x else 0; uses r3..r6
  Sequence mul;  // r1 = x*y; uses r3, r4
  Sequence div;  // r1 = quotient, r2 = remainder; uses r3..r9
};

const StdLib& stdlib();

}  // namespace budge::pl
