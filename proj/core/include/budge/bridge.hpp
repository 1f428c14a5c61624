#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "budge/pl.hpp"
#include "budge/tp.hpp"

namespace budge::bridge {

/// Unary numeral rendering: n 'S' characters followed by '0'.
std::string encode_numeral(std::uint64_t n);

/// Counts leading 'S' characters; nullopt unless the text is S...S0.
std::optional<std::uint64_t> decode_numeral(std::string_view text);

// Nested-pair term: an atom, or a pair rendered "(first second)". Lists are
// right-nested pairs ending in the atom NIL.
class Term {
 public:
  static Term atom(std::string name);
  static Term pair(Term first, Term second);
  static Term list(const std::vector<Term>& elements);

  bool is_pair() const { return pair_ != nullptr; }
  const std::string& atom_name() const { return atom_; }
  const Term& first() const { return pair_->first; }
  const Term& second() const { return pair_->second; }

  std::string render() const;

  bool operator==(const Term& other) const {
    return render() == other.render();
  }

 private:
  std::string atom_;
  std::shared_ptr<const std::pair<Term, Term>> pair_;
};

struct Command;

// Two-register program shape accepted by the embedding: register ops on r1
// and r2, loops on r2 only.
struct Program {
  std::vector<Command> commands;

  bool operator==(const Program&) const = default;
};

struct Command {
  enum class Kind { Incr1, Decr1, Incr2, Decr2, Loop2 };

  Kind kind{Kind::Incr1};
  Program body;  // Loop2 only

  bool operator==(const Command&) const = default;
};

// The embedding covers exactly what the inference rules can express; anything
// else is rejected up front.
class ScopeError final : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FuelError final : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structure-preserving translation from the general AST. Throws ScopeError
/// for registers beyond 2 or loops on register 1.
Program lower_program(const pl::Sequence& program);

/// Inverse of lower_program.
pl::Sequence to_sequence(const Program& program);

/// Command list as a NIL-terminated term: S0/P0/SS0/PP0 atoms, loops as
/// (SS0 body-list) pairs.
Term encode_program(const Program& program);

// One generated script line: which rule was applied, with which variable
// bindings and argument theorems, and the statement it proved.
struct PlanStep {
  std::string theorem;
  std::string rule;
  std::vector<std::pair<char, std::string>> bindings;
  std::vector<std::string> args;
  std::string statement;
};

struct ProofPlan {
  std::vector<PlanStep> steps;
  std::string script;          // complete .btp text including the rule prelude
  std::string final_theorem;   // name of the halt-state theorem
  std::string final_statement; // "NIL (Sa..0 Sb..0)"
};

// Accumulates a proof script over the fixed rule prelude: term-construction
// theorems (cached by rendering), APPEND lemmas and execution steps.
class ScriptBuilder {
 public:
  ScriptBuilder();

  const std::string& script() const { return script_; }
  const std::vector<PlanStep>& steps() const { return steps_; }

  /// Theorem proving the term's rendering; built on demand and cached.
  std::string term_theorem(const Term& term);
  std::string numeral_theorem(std::uint64_t n);

  struct AppendLemma {
    std::string theorem;
    Term result;  // zs with statement "APPEND xs ys zs"
  };
  /// Proves list concatenation, one rAppendRec per element of xs grounded in
  /// rAppendNil. xs must be a NIL-terminated list term.
  AppendLemma append_theorem(const Term& xs, const Term& ys);

  /// Records a rule application under a fresh tStep<k> name.
  std::string step_theorem(const std::string& rule,
                           std::vector<std::pair<char, std::string>> bindings,
                           std::vector<std::string> args,
                           std::string statement);

 private:
  std::string fresh(const char* prefix, std::size_t& counter);
  std::string emit(const char* prefix, std::size_t& counter,
                   const std::string& rule,
                   std::vector<std::pair<char, std::string>> bindings,
                   std::vector<std::string> args, std::string statement);

  std::string script_;
  std::vector<PlanStep> steps_;
  std::unordered_map<std::string, std::string> term_names_;    // render -> name
  std::unordered_map<std::string, std::string> append_names_;  // statement -> name
  std::size_t term_counter_ = 0;
  std::size_t append_counter_ = 0;
  std::size_t step_counter_ = 0;
};

/// Simulates the program and emits one theorem per execution step, APPEND
/// lemmas included, ending in a "NIL (a b)" halt theorem. Throws ScopeError
/// when execution decrements a zero register (the rule set has no skip rule)
/// and FuelError when the step budget runs out.
ProofPlan generate_proof(const Program& program, std::uint64_t r1,
                         std::uint64_t r2, const pl::EvalLimit& limit);

/// generate_proof + tp::check_script + comparison of the decoded halt state
/// against pl::eval_vector. True iff the checker accepts and states agree.
bool verify_bridge(const Program& program, std::uint64_t r1, std::uint64_t r2,
                   std::pair<std::uint64_t, std::uint64_t>* final_state = nullptr);

/// Splits a halt statement "NIL (A B)" into its two numerals.
std::optional<std::pair<std::uint64_t, std::uint64_t>> decode_halt_statement(
    std::string_view statement);

}  // namespace budge::bridge
