#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace budge::tp {

// A named inference rule. All parts but the last are hypotheses, the last is
// the conclusion; a 1-ary rule is an axiom/term constructor. Lowercase
// letters inside the parts are substitution variables.
struct Rule {
  std::string name;
  std::vector<std::string> parts;  // size >= 1

  std::size_t arity() const { return parts.size(); }
  const std::string& conclusion() const { return parts.back(); }

  bool operator==(const Rule&) const = default;
};

struct Theorem {
  std::string name;
  std::string statement;

  bool operator==(const Theorem&) const = default;
};

// One variable binding as written in a script: the value names a previously
// proved theorem.
struct Binding {
  char variable;
  std::string value_name;

  bool operator==(const Binding&) const = default;
};

struct RuleDecl {
  Rule rule;
  std::size_t line = 0;
};

struct TheoremDecl {
  std::string name;
  std::string rule_name;
  std::vector<Binding> substitutions;
  std::vector<std::string> args;
  std::size_t line = 0;
};

using Statement = std::variant<RuleDecl, TheoremDecl>;

enum class ErrorKind {
  Syntax,
  UnknownRule,
  UnknownTheorem,
  ArityMismatch,
  HypothesisMismatch,
  DuplicateName,
};

std::string_view to_string(ErrorKind kind);

class ScriptError final : public std::runtime_error {
 public:
  ScriptError(ErrorKind kind, std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        kind_(kind),
        line_(line),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  const std::string& message() const { return message_; }  // without location

  // populated for hypothesis mismatches
  std::size_t hypothesis_index = 0;  // 0-based
  std::string expected;
  std::string actual;

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::string message_;
};

// Rules and proved theorems, sharing one flat namespace. Theorems keep their
// declaration order. Only the checker can register entries, so everything in
// `theorems` went through check_statement.
class Session {
 public:
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<Theorem>& theorems() const { return theorems_; }

  const Rule* find_rule(const std::string& name) const;
  const Theorem* find_theorem(const std::string& name) const;
  bool has_name(const std::string& name) const { return names_.contains(name); }

  bool operator==(const Session& other) const {
    return rules_ == other.rules_ && theorems_ == other.theorems_;
  }

 private:
  friend void check_statement(Session&, const Statement&);

  void add_rule(Rule rule);  // duplicate checking happens in the checker
  void add_theorem(Theorem thm);

  struct NameRef {
    bool is_rule;
    std::size_t index;
  };

  std::vector<Rule> rules_;
  std::vector<Theorem> theorems_;
  std::unordered_map<std::string, NameRef> names_;
};

using ResolvedSubstitutions = std::vector<std::pair<char, std::string>>;

/// Parses a script into statements, one per non-empty, non-comment line.
/// Throws ScriptError (Syntax) with the offending line number.
std::vector<Statement> parse_script(std::string_view text);

/// Single-pass simultaneous replacement of bound lowercase variables;
/// inserted text is never rescanned. Unbound characters pass through.
std::string substitute(std::string_view expr,
                       const ResolvedSubstitutions& bindings);

/// Registers a rule, or checks a theorem declaration and registers the
/// resulting theorem. Throws ScriptError on any failure.
void check_statement(Session& session, const Statement& statement);

/// parse_script + check_statement over every line; first error wins.
Session check_script(std::string_view text);

/// Result listing, one "name : statement" line per theorem in declaration
/// order. Names ending in '!' mark auxiliary term lemmas and are skipped
/// unless include_term_lemmas is set.
std::string render_results(const Session& session,
                           bool include_term_lemmas = false);

}  // namespace budge::tp
