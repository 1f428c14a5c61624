#include "budge/tp.hpp"

#include <algorithm>
#include <cctype>

namespace budge::tp {

namespace {

bool is_variable(char c) { return c >= 'a' && c <= 'z'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(unsigned(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(unsigned(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(unsigned(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(unsigned(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void syntax_error(std::size_t line, const std::string& message) {
  throw ScriptError(ErrorKind::Syntax, line, message);
}

std::vector<Binding> parse_bindings(std::string_view token, std::size_t line) {
  std::vector<Binding> out;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    std::size_t end = token.find(';', pos);
    std::string_view piece = token.substr(
        pos, end == std::string_view::npos ? std::string_view::npos
                                           : end - pos);
    std::size_t eq = piece.find('=');
    if (eq == std::string_view::npos)
      syntax_error(line, "substitution must look like x=Name");
    std::string_view var = piece.substr(0, eq);
    std::string_view value = piece.substr(eq + 1);
    if (var.size() != 1 || !is_variable(var[0]))
      syntax_error(line, "substitution variable must be one lowercase letter");
    if (value.empty()) syntax_error(line, "substitution value name is empty");
    char v = var[0];
    for (const Binding& b : out)
      if (b.variable == v)
        syntax_error(line,
                     std::string("variable '") + v + "' bound twice");
    out.push_back({v, std::string(value)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

Statement parse_line(std::string_view line_text, std::size_t line) {
  std::size_t colon = line_text.find(':');
  if (colon == std::string_view::npos)
    syntax_error(line, "statement needs a ':'");
  std::string_view name = trim(line_text.substr(0, colon));
  std::string_view rest = line_text.substr(colon + 1);
  if (name.empty()) syntax_error(line, "statement has no name");
  if (name.find_first_of(" \t") != std::string_view::npos)
    syntax_error(line, "name must not contain whitespace");

  if (name.front() == 'r') {
    Rule rule;
    rule.name = std::string(name);
    std::size_t pos = 0;
    for (;;) {
      std::size_t arrow = rest.find("->", pos);
      std::string_view part = rest.substr(
          pos, arrow == std::string_view::npos ? std::string_view::npos
                                               : arrow - pos);
      part = trim(part);
      if (part.empty()) syntax_error(line, "empty rule expression");
      rule.parts.emplace_back(part);
      if (arrow == std::string_view::npos) break;
      pos = arrow + 2;
    }
    return RuleDecl{std::move(rule), line};
  }

  if (name.front() == 't') {
    auto tokens = split_whitespace(rest);
    if (tokens.empty()) syntax_error(line, "theorem needs a rule name");
    TheoremDecl decl;
    decl.name = std::string(name);
    decl.rule_name = std::string(tokens[0]);
    decl.line = line;
    std::size_t arg_start = 1;
    if (tokens.size() > 1 &&
        tokens[1].find('=') != std::string_view::npos) {
      decl.substitutions = parse_bindings(tokens[1], line);
      arg_start = 2;
    }
    for (std::size_t i = arg_start; i < tokens.size(); ++i)
      decl.args.emplace_back(tokens[i]);
    return decl;
  }

  syntax_error(line, "statement must start with 'r' (rule) or 't' (theorem)");
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax:
      return "syntax error";
    case ErrorKind::UnknownRule:
      return "unknown rule";
    case ErrorKind::UnknownTheorem:
      return "unknown theorem";
    case ErrorKind::ArityMismatch:
      return "arity mismatch";
    case ErrorKind::HypothesisMismatch:
      return "hypothesis mismatch";
    case ErrorKind::DuplicateName:
      return "duplicate name";
  }
  return "?";
}

const Rule* Session::find_rule(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end() || !it->second.is_rule) return nullptr;
  return &rules_[it->second.index];
}

const Theorem* Session::find_theorem(const std::string& name) const {
  auto it = names_.find(name);
  if (it == names_.end() || it->second.is_rule) return nullptr;
  return &theorems_[it->second.index];
}

void Session::add_rule(Rule rule) {
  names_.emplace(rule.name, NameRef{true, rules_.size()});
  rules_.push_back(std::move(rule));
}

void Session::add_theorem(Theorem thm) {
  names_.emplace(thm.name, NameRef{false, theorems_.size()});
  theorems_.push_back(std::move(thm));
}

std::vector<Statement> parse_script(std::string_view text) {
  std::vector<Statement> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::string_view content = trim(raw);
    if (!content.empty() && content.front() != '#')
      out.push_back(parse_line(raw, line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

std::string substitute(std::string_view expr,
                       const ResolvedSubstitutions& bindings) {
  std::string out;
  out.reserve(expr.size());
  for (char c : expr) {
    const std::string* value = nullptr;
    if (is_variable(c)) {
      for (const auto& [var, text] : bindings) {
        if (var == c) {
          value = &text;
          break;
        }
      }
    }
    if (value)
      out += *value;
    else
      out += c;
  }
  return out;
}

void check_statement(Session& session, const Statement& statement) {
  if (const auto* decl = std::get_if<RuleDecl>(&statement)) {
    if (session.has_name(decl->rule.name))
      throw ScriptError(ErrorKind::DuplicateName, decl->line,
                        "name '" + decl->rule.name + "' already declared");
    session.add_rule(decl->rule);
    return;
  }

  const auto& decl = std::get<TheoremDecl>(statement);
  if (session.has_name(decl.name))
    throw ScriptError(ErrorKind::DuplicateName, decl.line,
                      "name '" + decl.name + "' already declared");

  const Rule* rule = session.find_rule(decl.rule_name);
  if (!rule)
    throw ScriptError(ErrorKind::UnknownRule, decl.line,
                      "'" + decl.rule_name + "' does not name a rule");

  if (decl.args.size() + 1 != rule->arity()) {
    ScriptError err(ErrorKind::ArityMismatch, decl.line,
                    "rule '" + rule->name + "' takes " +
                        std::to_string(rule->arity() - 1) + " argument(s), " +
                        std::to_string(decl.args.size()) + " given");
    throw err;
  }

  ResolvedSubstitutions resolved;
  resolved.reserve(decl.substitutions.size());
  for (const Binding& binding : decl.substitutions) {
    const Theorem* value = session.find_theorem(binding.value_name);
    if (!value)
      throw ScriptError(ErrorKind::UnknownTheorem, decl.line,
                        "'" + binding.value_name + "' does not name a theorem");
    resolved.emplace_back(binding.variable, value->statement);
  }

  for (std::size_t k = 0; k + 1 < rule->arity(); ++k) {
    const Theorem* arg = session.find_theorem(decl.args[k]);
    if (!arg)
      throw ScriptError(ErrorKind::UnknownTheorem, decl.line,
                        "'" + decl.args[k] + "' does not name a theorem");
    // Substitutions apply to both sides before the character-level compare.
    std::string expected = substitute(rule->parts[k], resolved);
    std::string actual = substitute(arg->statement, resolved);
    if (expected != actual) {
      ScriptError err(ErrorKind::HypothesisMismatch, decl.line,
                      "hypothesis " + std::to_string(k + 1) +
                          " mismatch: expected \"" + expected +
                          "\", actual \"" + actual + "\"");
      err.hypothesis_index = k;
      err.expected = std::move(expected);
      err.actual = std::move(actual);
      throw err;
    }
  }

  session.add_theorem({decl.name, substitute(rule->conclusion(), resolved)});
}

Session check_script(std::string_view text) {
  Session session;
  for (const Statement& statement : parse_script(text))
    check_statement(session, statement);
  return session;
}

std::string render_results(const Session& session, bool include_term_lemmas) {
  std::string out;
  for (const Theorem& thm : session.theorems()) {
    if (!include_term_lemmas && !thm.name.empty() && thm.name.back() == '!')
      continue;
    out += thm.name;
    out += " : ";
    out += thm.statement;
    out += '\n';
  }
  return out;
}

}  // namespace budge::tp
