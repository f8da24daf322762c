// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/qasm.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "qroute/error.hpp"

namespace qroute {
namespace {

enum class Tok { Ident, Int, Real, String, Symbol, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size())
      return t;

    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.type = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_'))
        t.text += advance();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.type = Tok::Int;
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '.')) {
        if (src_[pos_] == '.')
          t.type = Tok::Real;
        t.text += advance();
      }
    } else if (c == '"') {
      t.type = Tok::String;
      advance();
      while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n')
        t.text += advance();
      if (pos_ >= src_.size() || src_[pos_] != '"')
        throw ParseError("unterminated string literal", t.line, t.column);
      advance();
    } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      t.type = Tok::Symbol;
      t.text = "->";
      advance();
      advance();
    } else if (c == ';' || c == ',' || c == '[' || c == ']' || c == '(' ||
               c == ')' || c == '{' || c == '}') {
      t.type = Tok::Symbol;
      t.text = std::string(1, advance());
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'",
                       t.line, t.column);
    }
    return t;
  }

private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n')
          advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (GateKind k : kAllGateKinds)
    if (mnemonic(k) == name)
      return k;
  return std::nullopt;
}

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) { bump(); }

  ParsedCircuit run() {
    while (cur_.type != Tok::End)
      statement();
    if (!qreg_)
      throw ParseError("missing qreg declaration");
    return ParsedCircuit{Circuit(qreg_->size, std::move(gates_)),
                         std::move(warnings_)};
  }

private:
  struct Register {
    std::string name;
    std::size_t size;
  };

  void bump() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

  void expect_symbol(std::string_view sym) {
    if (cur_.type != Tok::Symbol || cur_.text != sym)
      fail("expected '" + std::string(sym) + "'", cur_);
    bump();
  }

  Token expect(Tok type, std::string_view what) {
    if (cur_.type != type)
      fail("expected " + std::string(what), cur_);
    Token t = cur_;
    bump();
    return t;
  }

  std::size_t parse_index(const Token& at) {
    std::size_t value = 0;
    const auto* first = at.text.data();
    const auto* last = first + at.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
      fail("invalid integer '" + at.text + "'", at);
    return value;
  }

  void skip_to_semicolon() {
    while (!(cur_.type == Tok::Symbol && cur_.text == ";")) {
      if (cur_.type == Tok::End)
        fail("expected ';'", cur_);
      bump();
    }
    bump();
  }

  void statement() {
    const Token head = expect(Tok::Ident, "statement");
    if (head.text == "OPENQASM") {
      if (cur_.type != Tok::Real && cur_.type != Tok::Int)
        fail("expected version number", cur_);
      bump();
      expect_symbol(";");
    } else if (head.text == "include") {
      expect(Tok::String, "include path");
      expect_symbol(";");
    } else if (head.text == "qreg") {
      qreg_declaration(head);
    } else if (head.text == "creg" || head.text == "measure" ||
               head.text == "barrier") {
      warnings_.push_back("line " + std::to_string(head.line) + ": skipped '" +
                          head.text + "' statement");
      skip_to_semicolon();
    } else {
      gate_statement(head);
    }
  }

  void qreg_declaration(const Token& head) {
    if (qreg_)
      fail("multiple qreg declarations", head);
    const Token name = expect(Tok::Ident, "register name");
    expect_symbol("[");
    const Token size = expect(Tok::Int, "register size");
    expect_symbol("]");
    expect_symbol(";");
    qreg_ = Register{name.text, parse_index(size)};
  }

  void gate_statement(const Token& head) {
    const auto kind = gate_from_name(head.text);
    if (!kind)
      fail("unsupported gate '" + head.text + "'", head);
    if (!qreg_)
      fail("gate before qreg declaration", head);

    std::vector<std::pair<Qubit, Token>> operands;
    for (;;) {
      const Token reg = expect(Tok::Ident, "qubit operand");
      if (reg.text != qreg_->name)
        fail("unknown register '" + reg.text + "'", reg);
      expect_symbol("[");
      const Token idx = expect(Tok::Int, "qubit index");
      expect_symbol("]");
      const std::size_t index = parse_index(idx);
      if (index >= qreg_->size)
        fail("operand " + reg.text + "[" + idx.text + "] out of range", idx);
      operands.emplace_back(static_cast<Qubit>(index), reg);
      if (cur_.type == Tok::Symbol && cur_.text == ",") {
        bump();
        continue;
      }
      break;
    }
    expect_symbol(";");

    if (operands.size() != arity(*kind))
      fail(std::string(mnemonic(*kind)) + " expects " +
               std::to_string(arity(*kind)) + " operand(s), got " +
               std::to_string(operands.size()),
           head);
    if (operands.size() == 2 && operands[0].first == operands[1].first)
      fail("repeated operand", operands[1].second);

    Gate g;
    g.kind = *kind;
    g.operands[0] = operands[0].first;
    if (operands.size() == 2)
      g.operands[1] = operands[1].first;
    gates_.push_back(g);
  }

  Lexer lexer_;
  Token cur_;
  std::optional<Register> qreg_;
  std::vector<Gate> gates_;
  std::vector<std::string> warnings_;
};

} // namespace

ParsedCircuit parse_qasm(std::string_view text) { return Parser(text).run(); }

std::string to_qasm(const Circuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << circuit.num_qubits() << "];\n";
  for (const Gate& g : circuit.gates()) {
    out << mnemonic(g.kind) << " q[" << g.operands[0] << "]";
    if (g.is_two_qubit())
      out << ",q[" << g.operands[1] << "]";
    out << ";\n";
  }
  return out.str();
}

} // namespace qroute
