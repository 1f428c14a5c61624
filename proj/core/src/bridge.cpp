#include "budge/bridge.hpp"

namespace budge::bridge {

namespace {

// The inference rules of the embedding, verbatim. Command atoms S0/P0/SS0/PP0
// are built from rTmS/rTmP/rTm0 like any other term.
constexpr std::string_view kPrelude =
    "# Lists and numbers\n"
    "rMkList : (x y)\n"
    "rTmNil : NIL\n"
    "rTm0 : 0\n"
    "rTmS : Sx\n"
    "rTmP : Px\n"
    "\n"
    "# Initial program\n"
    "rInitState : p (a b)\n"
    "\n"
    "# Commands 1, -1, 2, -2 respectively\n"
    "rNextState+1 : (S0 x) (a b) -> x (Sa b)\n"
    "rNextState-1 : (P0 x) (Sa b) -> x (a b)\n"
    "rNextState+2 : (SS0 x) (a b) -> x (a Sb)\n"
    "rNextState-2 : (PP0 x) (a Sb) -> x (a b)\n"
    "\n"
    "# Commands for looping on the second register\n"
    "rLoop2Base : ((SS0 x) y) (a 0) -> y (a 0)\n"
    "rLoop2Succ : ((SS0 x) y) (a Sb) -> APPEND x ((SS0 x) y) z -> z (a Sb)\n"
    "\n"
    "# Appending lists\n"
    "rAppendNil : APPEND NIL y y\n"
    "rAppendRec : APPEND x y z -> APPEND (a x) y (a z)\n"
    "\n";

const Term& nil_term() {
  static const Term nil = Term::atom("NIL");
  return nil;
}

bool is_nil(const Term& t) { return !t.is_pair() && t.atom_name() == "NIL"; }

std::string state_statement(const Term& program, std::uint64_t a,
                            std::uint64_t b) {
  return program.render() + " (" + encode_numeral(a) + " " +
         encode_numeral(b) + ")";
}

}  // namespace

std::string encode_numeral(std::uint64_t n) {
  std::string out(n, 'S');
  out += '0';
  return out;
}

std::optional<std::uint64_t> decode_numeral(std::string_view text) {
  std::uint64_t count = 0;
  while (!text.empty() && text.front() == 'S') {
    text.remove_prefix(1);
    ++count;
  }
  if (text != "0") return std::nullopt;
  return count;
}

Term Term::atom(std::string name) {
  Term t;
  t.atom_ = std::move(name);
  return t;
}

Term Term::pair(Term first, Term second) {
  Term t;
  t.pair_ = std::make_shared<const std::pair<Term, Term>>(std::move(first),
                                                          std::move(second));
  return t;
}

Term Term::list(const std::vector<Term>& elements) {
  Term out = nil_term();
  for (auto it = elements.rbegin(); it != elements.rend(); ++it)
    out = pair(*it, std::move(out));
  return out;
}

std::string Term::render() const {
  if (!is_pair()) return atom_;
  return "(" + first().render() + " " + second().render() + ")";
}

Program lower_program(const pl::Sequence& program) {
  Program out;
  for (const pl::Instruction& instr : program) {
    if (instr.reg > 2)
      throw ScopeError("register " + std::to_string(instr.reg) +
                       " is outside the two-register embedding");
    Command cmd;
    switch (instr.kind) {
      case pl::Instruction::Kind::Incr:
        cmd.kind = instr.reg == 1 ? Command::Kind::Incr1 : Command::Kind::Incr2;
        break;
      case pl::Instruction::Kind::Decr:
        cmd.kind = instr.reg == 1 ? Command::Kind::Decr1 : Command::Kind::Decr2;
        break;
      case pl::Instruction::Kind::Loop:
        if (instr.reg != 2)
          throw ScopeError("loops are only available on register 2");
        cmd.kind = Command::Kind::Loop2;
        cmd.body = lower_program(instr.body);
        break;
    }
    out.commands.push_back(std::move(cmd));
  }
  return out;
}

pl::Sequence to_sequence(const Program& program) {
  pl::Sequence out;
  for (const Command& cmd : program.commands) {
    switch (cmd.kind) {
      case Command::Kind::Incr1:
        out.push_back(pl::Instruction::incr(1));
        break;
      case Command::Kind::Decr1:
        out.push_back(pl::Instruction::decr(1));
        break;
      case Command::Kind::Incr2:
        out.push_back(pl::Instruction::incr(2));
        break;
      case Command::Kind::Decr2:
        out.push_back(pl::Instruction::decr(2));
        break;
      case Command::Kind::Loop2:
        out.push_back(pl::Instruction::loop(2, to_sequence(cmd.body)));
        break;
    }
  }
  return out;
}

Term encode_program(const Program& program) {
  std::vector<Term> elements;
  elements.reserve(program.commands.size());
  for (const Command& cmd : program.commands) {
    switch (cmd.kind) {
      case Command::Kind::Incr1:
        elements.push_back(Term::atom("S0"));
        break;
      case Command::Kind::Decr1:
        elements.push_back(Term::atom("P0"));
        break;
      case Command::Kind::Incr2:
        elements.push_back(Term::atom("SS0"));
        break;
      case Command::Kind::Decr2:
        elements.push_back(Term::atom("PP0"));
        break;
      case Command::Kind::Loop2:
        elements.push_back(
            Term::pair(Term::atom("SS0"), encode_program(cmd.body)));
        break;
    }
  }
  return Term::list(elements);
}

ScriptBuilder::ScriptBuilder() : script_(kPrelude) {}

std::string ScriptBuilder::fresh(const char* prefix, std::size_t& counter) {
  return std::string(prefix) + std::to_string(counter++);
}

std::string ScriptBuilder::emit(
    const char* prefix, std::size_t& counter, const std::string& rule,
    std::vector<std::pair<char, std::string>> bindings,
    std::vector<std::string> args, std::string statement) {
  std::string name = fresh(prefix, counter);
  script_ += name;
  script_ += " : ";
  script_ += rule;
  if (!bindings.empty()) {
    script_ += ' ';
    bool first = true;
    for (const auto& [var, value] : bindings) {
      if (!first) script_ += ';';
      first = false;
      script_ += var;
      script_ += '=';
      script_ += value;
    }
  }
  for (const std::string& arg : args) {
    script_ += ' ';
    script_ += arg;
  }
  script_ += '\n';
  steps_.push_back({name, rule, std::move(bindings), std::move(args),
                    std::move(statement)});
  return name;
}

std::string ScriptBuilder::term_theorem(const Term& term) {
  std::string rendering = term.render();
  if (auto it = term_names_.find(rendering); it != term_names_.end())
    return it->second;

  std::string name;
  if (term.is_pair()) {
    std::string head = term_theorem(term.first());
    std::string tail = term_theorem(term.second());
    name = emit("tTm", term_counter_, "rMkList", {{'x', head}, {'y', tail}},
                {}, rendering);
  } else if (rendering == "NIL") {
    name = emit("tTm", term_counter_, "rTmNil", {}, {}, rendering);
  } else if (rendering == "0") {
    name = emit("tTm", term_counter_, "rTm0", {}, {}, rendering);
  } else if (rendering.front() == 'S' || rendering.front() == 'P') {
    std::string inner = term_theorem(Term::atom(rendering.substr(1)));
    name = emit("tTm", term_counter_,
                rendering.front() == 'S' ? "rTmS" : "rTmP", {{'x', inner}}, {},
                rendering);
  } else {
    throw std::logic_error("no constructor for atom '" + rendering + "'");
  }
  term_names_.emplace(std::move(rendering), name);
  return name;
}

std::string ScriptBuilder::numeral_theorem(std::uint64_t n) {
  return term_theorem(Term::atom(encode_numeral(n)));
}

ScriptBuilder::AppendLemma ScriptBuilder::append_theorem(const Term& xs,
                                                         const Term& ys) {
  if (is_nil(xs)) {
    std::string statement = "APPEND NIL " + ys.render() + " " + ys.render();
    if (auto it = append_names_.find(statement); it != append_names_.end())
      return {it->second, ys};
    std::string name = emit("tApp", append_counter_, "rAppendNil",
                            {{'y', term_theorem(ys)}}, {}, statement);
    append_names_.emplace(std::move(statement), name);
    return {name, ys};
  }

  const Term& head = xs.first();
  const Term& tail = xs.second();
  AppendLemma inner = append_theorem(tail, ys);
  Term result = Term::pair(head, inner.result);
  std::string statement =
      "APPEND " + xs.render() + " " + ys.render() + " " + result.render();
  if (auto it = append_names_.find(statement); it != append_names_.end())
    return {it->second, std::move(result)};
  std::string name =
      emit("tApp", append_counter_, "rAppendRec",
           {{'x', term_theorem(tail)},
            {'y', term_theorem(ys)},
            {'z', term_theorem(inner.result)},
            {'a', term_theorem(head)}},
           {inner.theorem}, statement);
  append_names_.emplace(std::move(statement), name);
  return {name, std::move(result)};
}

std::string ScriptBuilder::step_theorem(
    const std::string& rule, std::vector<std::pair<char, std::string>> bindings,
    std::vector<std::string> args, std::string statement) {
  return emit("tStep", step_counter_, rule, std::move(bindings),
              std::move(args), std::move(statement));
}

ProofPlan generate_proof(const Program& program, std::uint64_t r1,
                         std::uint64_t r2, const pl::EvalLimit& limit) {
  ScriptBuilder builder;
  Term list = encode_program(program);
  std::uint64_t a = r1;
  std::uint64_t b = r2;

  std::optional<std::uint64_t> fuel = limit.max_steps;
  auto take_fuel = [&fuel] {
    if (fuel) {
      if (*fuel == 0)
        throw FuelError("step budget exhausted; program may diverge");
      --*fuel;
    }
  };

  std::string current = builder.step_theorem(
      "rInitState",
      {{'p', builder.term_theorem(list)},
       {'a', builder.numeral_theorem(a)},
       {'b', builder.numeral_theorem(b)}},
      {}, state_statement(list, a, b));

  while (!is_nil(list)) {
    const Term head = list.first();
    const Term rest = list.second();

    if (!head.is_pair()) {
      take_fuel();
      const std::string& atom = head.atom_name();
      std::string rule;
      if (atom == "S0") {
        rule = "rNextState+1";
        current = builder.step_theorem(
            rule,
            {{'x', builder.term_theorem(rest)},
             {'a', builder.numeral_theorem(a)},
             {'b', builder.numeral_theorem(b)}},
            {current}, state_statement(rest, a + 1, b));
        ++a;
      } else if (atom == "P0") {
        if (a == 0)
          throw ScopeError(
              "decrement of register 1 at zero has no inference rule");
        rule = "rNextState-1";
        current = builder.step_theorem(
            rule,
            {{'x', builder.term_theorem(rest)},
             {'a', builder.numeral_theorem(a - 1)},
             {'b', builder.numeral_theorem(b)}},
            {current}, state_statement(rest, a - 1, b));
        --a;
      } else if (atom == "SS0") {
        rule = "rNextState+2";
        current = builder.step_theorem(
            rule,
            {{'x', builder.term_theorem(rest)},
             {'a', builder.numeral_theorem(a)},
             {'b', builder.numeral_theorem(b)}},
            {current}, state_statement(rest, a, b + 1));
        ++b;
      } else if (atom == "PP0") {
        if (b == 0)
          throw ScopeError(
              "decrement of register 2 at zero has no inference rule");
        rule = "rNextState-2";
        current = builder.step_theorem(
            rule,
            {{'x', builder.term_theorem(rest)},
             {'a', builder.numeral_theorem(a)},
             {'b', builder.numeral_theorem(b - 1)}},
            {current}, state_statement(rest, a, b - 1));
        --b;
      } else {
        throw std::logic_error("unknown command atom '" + atom + "'");
      }
      list = rest;
      continue;
    }

    // Loop cell ((SS0 body) rest): guard on register 2.
    const Term body = head.second();
    take_fuel();
    if (b == 0) {
      current = builder.step_theorem(
          "rLoop2Base",
          {{'x', builder.term_theorem(body)},
           {'y', builder.term_theorem(rest)},
           {'a', builder.numeral_theorem(a)}},
          {current}, state_statement(rest, a, 0));
      list = rest;
    } else {
      // Unroll once: the continuation is body ++ (loop : rest), proved by an
      // APPEND lemma feeding rLoop2Succ's second hypothesis.
      ScriptBuilder::AppendLemma lemma = builder.append_theorem(body, list);
      current = builder.step_theorem(
          "rLoop2Succ",
          {{'x', builder.term_theorem(body)},
           {'y', builder.term_theorem(rest)},
           {'a', builder.numeral_theorem(a)},
           {'b', builder.numeral_theorem(b - 1)},
           {'z', builder.term_theorem(lemma.result)}},
          {current, lemma.theorem}, state_statement(lemma.result, a, b));
      list = lemma.result;
    }
  }

  ProofPlan plan;
  plan.steps = builder.steps();
  plan.script = builder.script();
  plan.final_theorem = current;
  plan.final_statement = state_statement(nil_term(), a, b);
  return plan;
}

bool verify_bridge(const Program& program, std::uint64_t r1, std::uint64_t r2,
                   std::pair<std::uint64_t, std::uint64_t>* final_state) {
  ProofPlan plan = generate_proof(program, r1, r2,
                                  pl::EvalLimit::bounded(pl::kDefaultMaxSteps));
  tp::Session session;
  try {
    session = tp::check_script(plan.script);
  } catch (const tp::ScriptError&) {
    return false;
  }
  const tp::Theorem* final_thm = session.find_theorem(plan.final_theorem);
  if (!final_thm) return false;
  auto decoded = decode_halt_statement(final_thm->statement);
  if (!decoded) return false;
  if (final_state) *final_state = *decoded;

  std::vector<std::uint64_t> start;
  if (r1 || r2) start = {r1, r2};
  pl::VectorResult expected =
      pl::eval_vector(godel::RegisterVector(std::move(start)),
                      to_sequence(program),
                      pl::EvalLimit::bounded(pl::kDefaultMaxSteps));
  if (expected.out_of_fuel) return false;
  return expected.state.get(1) == decoded->first &&
         expected.state.get(2) == decoded->second;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> decode_halt_statement(
    std::string_view statement) {
  constexpr std::string_view prefix = "NIL (";
  if (!statement.starts_with(prefix) || !statement.ends_with(")"))
    return std::nullopt;
  std::string_view inner = statement.substr(
      prefix.size(), statement.size() - prefix.size() - 1);
  std::size_t space = inner.find(' ');
  if (space == std::string_view::npos) return std::nullopt;
  auto first = decode_numeral(inner.substr(0, space));
  auto second = decode_numeral(inner.substr(space + 1));
  if (!first || !second) return std::nullopt;
  return std::make_pair(*first, *second);
}

}  // namespace budge::bridge
