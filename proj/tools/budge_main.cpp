// budge: batch CLI over .bpl programs and .btp proof scripts.
//
// Exit codes are stable for scripting:
//   0 ok, 1 syntax/usage error, 2 check failure, 3 step budget exhausted,
//   4 outside the two-register embedding scope.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "budge/bridge.hpp"
#include "budge/godel.hpp"
#include "budge/pl.hpp"
#include "budge/tp.hpp"

namespace {

namespace pl = budge::pl;
namespace tp = budge::tp;
namespace bridge = budge::bridge;
namespace godel = budge::godel;

enum ExitStatus : int {
  kOk = 0,
  kSyntaxError = 1,
  kCheckFailure = 2,
  kBudgetExhausted = 3,
  kScopeError = 4,
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<std::uint64_t> parse_register_list(const std::string& text) {
  std::vector<std::uint64_t> values;
  if (text.empty()) return values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string piece = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
      throw std::runtime_error("--registers expects comma-separated naturals");
    values.push_back(std::stoull(piece));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::string format_registers(const godel::RegisterVector& state) {
  std::string out;
  for (std::size_t k = 1; k <= state.size(); ++k) {
    if (k > 1) out += ", ";
    out += "r" + std::to_string(k) + "=" + std::to_string(state.get(k));
  }
  return out;
}

nlohmann::json registers_json(const godel::RegisterVector& state) {
  return nlohmann::json(state.exponents());
}

std::string trace_json_lines(const pl::Sequence& program,
                             const pl::Trace& trace) {
  std::string out;
  std::size_t n = 0;
  for (const pl::TraceStep& step : trace) {
    const pl::Instruction* instr = pl::instruction_at(program, step.path);
    nlohmann::json record;
    record["step"] = ++n;
    record["path"] = step.path;
    record["action"] = std::string(pl::to_string(step.action));
    record["register"] = instr ? instr->reg : 0;
    record["pre"] = registers_json(step.pre);
    record["post"] = registers_json(step.post);
    record["pre_godel"] = godel::encode(step.pre).get_str();
    record["post_godel"] = godel::encode(step.post).get_str();
    out += record.dump();
    out += '\n';
  }
  return out;
}

struct RunOptions {
  std::string program_path;
  std::string registers_text;
  std::string godel_text;
  std::string engine = "vector";
  std::string trace = "off";
  std::uint64_t max_steps = pl::kDefaultMaxSteps;
  bool paranoid = false;
};

int cmd_run(const RunOptions& opt) {
  pl::Sequence program;
  try {
    program = pl::parse_program(read_file(opt.program_path));
  } catch (const pl::ParseError& err) {
    std::cerr << opt.program_path << ":" << err.what() << "\n";
    return kSyntaxError;
  }

  godel::RegisterVector start;
  if (!opt.godel_text.empty()) {
    if (opt.godel_text.find_first_not_of("0123456789") != std::string::npos) {
      std::cerr << "--godel expects a decimal integer\n";
      return kSyntaxError;
    }
    godel::BigInt value(opt.godel_text);
    if (value < 1) {
      std::cerr << "--godel expects a value >= 1\n";
      return kSyntaxError;
    }
    start = godel::decode(value);
  } else {
    start = godel::RegisterVector(parse_register_list(opt.registers_text));
  }

  std::string engine = opt.paranoid ? "both" : opt.engine;
  bool want_trace = opt.trace != "off";
  if (want_trace && engine == "godel") {
    std::cerr << "tracing requires the vector engine\n";
    return kSyntaxError;
  }

  pl::EvalLimit limit = pl::EvalLimit::bounded(opt.max_steps);
  godel::RegisterVector final_state;
  godel::BigInt final_value;

  if (engine == "godel") {
    pl::GodelResult result = pl::eval_godel(godel::encode(start), program, limit);
    if (result.out_of_fuel) {
      std::cerr << "step budget exhausted after " << result.steps << " steps\n";
      return kBudgetExhausted;
    }
    final_value = result.value;
    final_state = godel::decode(final_value);
  } else {
    pl::VectorResult result = pl::eval_vector(start, program, limit, want_trace);
    if (engine == "both") {
      pl::GodelResult check = pl::eval_godel(godel::encode(start), program, limit);
      if (check.out_of_fuel != result.out_of_fuel ||
          (!result.out_of_fuel && godel::encode(result.state) != check.value)) {
        std::cerr << "engine disagreement: vector "
                  << godel::encode(result.state).get_str() << ", godel "
                  << check.value.get_str() << "\n";
        return kCheckFailure;
      }
    }
    if (opt.trace == "text")
      std::cout << pl::format_trace_text(program, result.trace);
    else if (opt.trace == "json")
      std::cout << trace_json_lines(program, result.trace);
    if (result.out_of_fuel) {
      std::cerr << "step budget exhausted after " << result.steps << " steps\n";
      return kBudgetExhausted;
    }
    final_state = std::move(result.state);
    final_value = godel::encode(final_state);
  }

  if (!final_state.empty()) std::cout << format_registers(final_state) << "\n";
  std::cout << "godel=" << final_value.get_str() << "\n";
  return kOk;
}

int cmd_check(const std::string& path, bool show_all) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return kSyntaxError;
  }
  try {
    tp::Session session = tp::check_script(text);
    std::cout << tp::render_results(session, show_all);
    return kOk;
  } catch (const tp::ScriptError& err) {
    std::cerr << path << ":" << err.line() << ": " << tp::to_string(err.kind())
              << ": " << err.message() << "\n";
    return err.kind() == tp::ErrorKind::Syntax ? kSyntaxError : kCheckFailure;
  }
}

int cmd_bridge(const std::string& program_path, std::uint64_t r1,
               std::uint64_t r2, const std::string& out_path,
               std::uint64_t max_steps) {
  pl::Sequence sequence;
  try {
    sequence = pl::parse_program(read_file(program_path));
  } catch (const pl::ParseError& err) {
    std::cerr << program_path << ":" << err.what() << "\n";
    return kSyntaxError;
  }

  bridge::ProofPlan plan;
  try {
    bridge::Program program = bridge::lower_program(sequence);
    plan = bridge::generate_proof(program, r1, r2,
                                  pl::EvalLimit::bounded(max_steps));
  } catch (const bridge::ScopeError& err) {
    std::cerr << "scope error: " << err.what() << "\n";
    return kScopeError;
  } catch (const bridge::FuelError& err) {
    std::cerr << err.what() << "\n";
    return kBudgetExhausted;
  }

  write_file(out_path, plan.script);
  std::cout << "wrote " << out_path << "\n";

  std::string sidecar_path = out_path + ".trace.jsonl";
  std::string sidecar;
  for (const bridge::PlanStep& step : plan.steps) {
    nlohmann::json record;
    record["theorem"] = step.theorem;
    record["rule"] = step.rule;
    nlohmann::json bindings = nlohmann::json::object();
    for (const auto& [var, value] : step.bindings)
      bindings[std::string(1, var)] = value;
    record["bindings"] = bindings;
    record["args"] = step.args;
    record["statement"] = step.statement;
    sidecar += record.dump();
    sidecar += '\n';
  }
  write_file(sidecar_path, sidecar);
  std::cout << "wrote " << sidecar_path << "\n";

  tp::Session session;
  try {
    session = tp::check_script(plan.script);
  } catch (const tp::ScriptError& err) {
    std::cerr << "generated proof rejected: " << err.what() << "\n";
    return kCheckFailure;
  }
  const tp::Theorem* final_thm = session.find_theorem(plan.final_theorem);
  auto decoded = final_thm
                     ? bridge::decode_halt_statement(final_thm->statement)
                     : std::nullopt;
  if (!decoded) {
    std::cerr << "generated proof has no decodable halt state\n";
    return kCheckFailure;
  }
  std::cout << "state (" << decoded->first << " " << decoded->second << ")\n";

  pl::VectorResult expected =
      pl::eval_vector(godel::RegisterVector(r1 || r2
                                                ? std::vector<std::uint64_t>{r1, r2}
                                                : std::vector<std::uint64_t>{}),
                      sequence, pl::EvalLimit::bounded(max_steps));
  bool ok = !expected.out_of_fuel &&
            expected.state.get(1) == decoded->first &&
            expected.state.get(2) == decoded->second;
  if (!ok) {
    std::cerr << "halt state disagrees with the interpreter\n";
    return kCheckFailure;
  }
  std::cout << "verified\n";
  return kOk;
}

int cmd_pseudo(const std::string& path) {
  try {
    pl::Sequence program = pl::parse_program(read_file(path));
    std::string text = pl::pseudocode(program);
    if (!text.empty()) std::cout << text << "\n";
    return kOk;
  } catch (const pl::ParseError& err) {
    std::cerr << path << ":" << err.what() << "\n";
    return kSyntaxError;
  }
}

int cmd_stdlib(const std::string& dir) {
  const pl::StdLib& lib = pl::stdlib();
  const std::pair<const char*, const pl::Sequence*> programs[] = {
      {"add.bpl", &lib.add},
      {"sub.bpl", &lib.sub},
      {"mul.bpl", &lib.mul},
      {"div.bpl", &lib.div},
  };
  for (const auto& [name, program] : programs) {
    std::string path = dir + "/" + name;
    write_file(path, pl::print_program(*program) + "\n");
    std::cout << "wrote " << path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budge-PL interpreter and Budge-TP proof checker"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "evaluate a .bpl program");
  run->add_option("program", run_opt.program_path, "program file")->required();
  CLI::Option* regs =
      run->add_option("--registers", run_opt.registers_text,
                      "initial registers, e.g. 3,3 (default: all zero)");
  run->add_option("--godel", run_opt.godel_text, "initial state as a Godel number")
      ->excludes(regs);
  run->add_option("--engine", run_opt.engine, "vector|godel|both")
      ->check(CLI::IsMember({"vector", "godel", "both"}));
  run->add_option("--max-steps", run_opt.max_steps, "step budget")
      ->check(CLI::PositiveNumber);
  run->add_option("--trace", run_opt.trace, "off|text|json")
      ->check(CLI::IsMember({"off", "text", "json"}));
  run->add_flag("--paranoid", run_opt.paranoid,
                "cross-check the vector engine against the literal semantics");

  std::string check_path;
  bool check_all = false;
  CLI::App* check = app.add_subcommand("check", "check a .btp proof script");
  check->add_option("script", check_path, "script file")->required();
  check->add_flag("--all", check_all, "also list term lemmas (names ending in !)");

  std::string bridge_program, bridge_out;
  std::uint64_t bridge_r1 = 0, bridge_r2 = 0;
  std::uint64_t bridge_max_steps = pl::kDefaultMaxSteps;
  CLI::App* bridge_cmd = app.add_subcommand(
      "bridge", "compile a two-register program run into a proof script");
  bridge_cmd->add_option("program", bridge_program, "program file")->required();
  bridge_cmd->add_option("r1", bridge_r1, "initial register 1")->required();
  bridge_cmd->add_option("r2", bridge_r2, "initial register 2")->required();
  bridge_cmd->add_option("--out", bridge_out, "output .btp path")->required();
  bridge_cmd->add_option("--max-steps", bridge_max_steps, "step budget")
      ->check(CLI::PositiveNumber);

  std::string pseudo_path;
  CLI::App* pseudo = app.add_subcommand("pseudo", "print a program as pseudo-code");
  pseudo->add_option("program", pseudo_path, "program file")->required();

  std::string stdlib_dir = ".";
  CLI::App* stdlib_cmd =
      app.add_subcommand("stdlib", "write the bundled arithmetic programs");
  stdlib_cmd->add_option("--dir", stdlib_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_opt);
    if (check->parsed()) return cmd_check(check_path, check_all);
    if (bridge_cmd->parsed())
      return cmd_bridge(bridge_program, bridge_r1, bridge_r2, bridge_out,
                        bridge_max_steps);
    if (pseudo->parsed()) return cmd_pseudo(pseudo_path);
    if (stdlib_cmd->parsed()) return cmd_stdlib(stdlib_dir);
  } catch (const std::exception& err) {
    std::cerr << err.what() << "\n";
    return kSyntaxError;
  }
  return kOk;
}
