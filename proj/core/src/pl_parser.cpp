#include "budge/pl.hpp"

#include <cctype>
#include <limits>

namespace budge::pl {

namespace {

struct Token {
  enum class Kind { LParen, RParen, Comma, Number, End };
  Kind kind;
  bool negative = false;
  std::uint64_t value = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

 private:
  void advance() {
    skip_blank();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Token::Kind::End;
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(':
        current_.kind = Token::Kind::LParen;
        bump();
        return;
      case ')':
        current_.kind = Token::Kind::RParen;
        bump();
        return;
      case ',':
        current_.kind = Token::Kind::Comma;
        bump();
        return;
      default:
        break;
    }
    bool negative = false;
    if (c == '-') {
      negative = true;
      bump();
      if (pos_ >= text_.size() || !std::isdigit(unsigned(text_[pos_])))
        throw ParseError("expected digits after '-'", current_.line,
                         current_.column);
    } else if (!std::isdigit(unsigned(c))) {
      throw ParseError(std::string("unexpected character '") + c + "'", line_,
                       column_);
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(unsigned(text_[pos_]))) {
      std::uint64_t digit = std::uint64_t(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw ParseError("register index does not fit a machine word",
                         current_.line, current_.column);
      value = value * 10 + digit;
      bump();
    }
    if (value == 0)
      throw ParseError("register indices start at 1", current_.line,
                       current_.column);
    current_.kind = Token::Kind::Number;
    current_.negative = negative;
    current_.value = value;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(unsigned(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Sequence parse() {
    expect(Token::Kind::LParen, "program must start with '('");
    if (lex_.peek().kind == Token::Kind::RParen)
      lex_.fail("empty program", lex_.peek());
    Sequence program = statements();
    expect(Token::Kind::RParen, "expected ')'");
    if (lex_.peek().kind != Token::Kind::End)
      lex_.fail("trailing input after program", lex_.peek());
    return program;
  }

 private:
  Sequence statements() {
    Sequence out;
    out.push_back(statement());
    while (lex_.peek().kind == Token::Kind::Comma) {
      lex_.take();
      out.push_back(statement());
    }
    return out;
  }

  Instruction statement() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Number) {
      Token n = lex_.take();
      return n.negative ? Instruction::decr(n.value)
                        : Instruction::incr(n.value);
    }
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      Token head = lex_.peek();
      if (head.kind != Token::Kind::Number)
        lex_.fail("loop head must be a register index", head);
      if (head.negative) lex_.fail("loop head must be positive", head);
      lex_.take();
      expect(Token::Kind::Comma, "loop requires a body");
      Sequence body = statements();
      expect(Token::Kind::RParen, "expected ')'");
      return Instruction::loop(head.value, std::move(body));
    }
    lex_.fail("expected a statement", t);
  }

  void expect(Token::Kind kind, const std::string& message) {
    if (lex_.peek().kind != kind) lex_.fail(message, lex_.peek());
    lex_.take();
  }

  Lexer lex_;
};

void print_statement(const Instruction& instr, std::string& out) {
  switch (instr.kind) {
    case Instruction::Kind::Incr:
      out += std::to_string(instr.reg);
      break;
    case Instruction::Kind::Decr:
      out += '-';
      out += std::to_string(instr.reg);
      break;
    case Instruction::Kind::Loop:
      out += '(';
      out += std::to_string(instr.reg);
      for (const Instruction& inner : instr.body) {
        out += ',';
        print_statement(inner, out);
      }
      out += ')';
      break;
  }
}

void pseudocode_lines(const Sequence& seq, std::size_t depth,
                      std::string& out) {
  const std::string indent(2 * depth, ' ');
  for (const Instruction& instr : seq) {
    switch (instr.kind) {
      case Instruction::Kind::Incr:
        out += indent + "r" + std::to_string(instr.reg) + " += 1;\n";
        break;
      case Instruction::Kind::Decr:
        out += indent + "r" + std::to_string(instr.reg) + " -= 1;\n";
        break;
      case Instruction::Kind::Loop:
        out += indent + "while (r" + std::to_string(instr.reg) + " > 0) {\n";
        pseudocode_lines(instr.body, depth + 1, out);
        out += indent + "}\n";
        break;
    }
  }
}

}  // namespace

Sequence parse_program(std::string_view text) {
  return Parser(text).parse();
}

std::string print_program(const Sequence& program) {
  std::string out = "(";
  bool first = true;
  for (const Instruction& instr : program) {
    if (!first) out += ',';
    first = false;
    print_statement(instr, out);
  }
  out += ')';
  return out;
}

std::string pseudocode(const Sequence& program) {
  std::string out;
  pseudocode_lines(program, 0, out);
  if (!out.empty() && out.back() == '\n') out.pop_back();
  return out;
}

Sequence compose(Sequence first, const Sequence& second) {
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

const Instruction* instruction_at(const Sequence& program,
                                  std::span<const std::size_t> path) {
  const Sequence* seq = &program;
  const Instruction* found = nullptr;
  for (std::size_t index : path) {
    if (index >= seq->size()) return nullptr;
    found = &(*seq)[index];
    seq = &found->body;
  }
  return found;
}

}  // namespace budge::pl
