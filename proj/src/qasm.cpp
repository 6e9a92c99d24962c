// Copyright 2026 zxopt contributors
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

#include "zxopt/qasm.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

namespace zxopt {

namespace {

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// A minimal cursor over one statement (already ';'-stripped).
struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw ParseError(line, std::string("expected '") + c + "'");
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    return s.substr(start, pos - start);
  }
  std::int64_t integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) throw ParseError(line, "expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
  bool done() {
    skip_ws();
    return pos == s.size();
  }
};

int parse_qubit(Cursor& c, int n_qubits) {
  if (!c.eat_word("q")) throw ParseError(c.line, "expected qubit reference");
  c.expect('[');
  std::int64_t idx = c.integer();
  c.expect(']');
  if (idx < 0 || idx >= n_qubits)
    throw ParseError(c.line, "qubit index " + std::to_string(idx) +
                                 " out of range for register of size " +
                                 std::to_string(n_qubits));
  return static_cast<int>(idx);
}

// `num*pi/den` with optional `num*` and `/den` parts, e.g. `3*pi/4`,
// `pi/2`, `pi`, `0*pi/1`.
Phase parse_angle(Cursor& c) {
  c.skip_ws();
  std::int64_t num = 1;
  if (c.pos < c.s.size() &&
      (std::isdigit(static_cast<unsigned char>(c.s[c.pos])) ||
       c.s[c.pos] == '-')) {
    num = c.integer();
    c.expect('*');
  }
  if (!c.eat_word("pi")) throw ParseError(c.line, "expected 'pi' in angle");
  std::int64_t den = 1;
  if (c.eat('/')) den = c.integer();
  if (den == 0) throw ParseError(c.line, "zero denominator in angle");
  return Phase(num, den);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<Circuit> circ;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto cut = raw.find("//"); cut != std::string::npos)
      raw.resize(cut);
    std::string line = strip(raw);
    if (line.empty()) continue;
    // One statement per line; allow several ';'-terminated statements too.
    size_t start = 0;
    while (start < line.size()) {
      size_t semi = line.find(';', start);
      if (semi == std::string::npos)
        throw ParseError(line_no, "missing ';'");
      std::string stmt = strip(line.substr(start, semi - start));
      start = semi + 1;
      if (stmt.empty()) continue;

      Cursor c{stmt, 0, line_no};
      std::string head = c.word();
      if (head.empty()) throw ParseError(line_no, "empty statement");

      if (!circ) {
        if (head != "qreg")
          throw ParseError(line_no, "expected 'qreg q[N];' header");
        if (!c.eat_word("q")) throw ParseError(line_no, "expected 'q'");
        c.expect('[');
        std::int64_t n = c.integer();
        c.expect(']');
        if (!c.done()) throw ParseError(line_no, "trailing input after qreg");
        if (n <= 0) throw ParseError(line_no, "register size must be >= 1");
        circ = Circuit(static_cast<int>(n));
        continue;
      }
      if (head == "qreg")
        throw ParseError(line_no, "duplicate qreg declaration");

      Circuit& cc = *circ;
      if (head == "h") {
        cc.add(Gate::h(parse_qubit(c, cc.n_qubits)));
      } else if (head == "t") {
        cc.add(Gate::z_phase(parse_qubit(c, cc.n_qubits), Phase(1, 4)));
      } else if (head == "tdg") {
        cc.add(Gate::z_phase(parse_qubit(c, cc.n_qubits), Phase(7, 4)));
      } else if (head == "s") {
        cc.add(Gate::z_phase(parse_qubit(c, cc.n_qubits), Phase(1, 2)));
      } else if (head == "sdg") {
        cc.add(Gate::z_phase(parse_qubit(c, cc.n_qubits), Phase(3, 2)));
      } else if (head == "z") {
        cc.add(Gate::z_phase(parse_qubit(c, cc.n_qubits), Phase(1, 1)));
      } else if (head == "x") {
        cc.add(Gate::x_phase(parse_qubit(c, cc.n_qubits), Phase(1, 1)));
      } else if (head == "rz" || head == "rx") {
        c.expect('(');
        Phase p = parse_angle(c);
        c.expect(')');
        int q = parse_qubit(c, cc.n_qubits);
        cc.add(head == "rz" ? Gate::z_phase(q, p) : Gate::x_phase(q, p));
      } else if (head == "cx" || head == "cz") {
        int a = parse_qubit(c, cc.n_qubits);
        c.expect(',');
        int b = parse_qubit(c, cc.n_qubits);
        if (a == b)
          throw ParseError(line_no, "two-qubit gate needs distinct qubits");
        cc.add(head == "cx" ? Gate::cnot(a, b) : Gate::cz(a, b));
      } else {
        throw ParseError(line_no, "unknown gate '" + head + "'");
      }
      if (!c.done()) throw ParseError(line_no, "trailing input in statement");
    }
  }
  if (!circ) throw ParseError(line_no, "missing 'qreg q[N];' header");
  return *circ;
}

std::string emit_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qreg q[" << c.n_qubits << "];\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
        out << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::ZPhase: {
        const Phase& p = g.phase;
        if (p == Phase(1, 4))
          out << "t q[" << g.q0 << "];\n";
        else if (p == Phase(7, 4))
          out << "tdg q[" << g.q0 << "];\n";
        else if (p == Phase(1, 2))
          out << "s q[" << g.q0 << "];\n";
        else if (p == Phase(3, 2))
          out << "sdg q[" << g.q0 << "];\n";
        else if (p == Phase(1, 1))
          out << "z q[" << g.q0 << "];\n";
        else
          out << "rz(" << p.num() << "*pi/" << p.den() << ") q[" << g.q0
              << "];\n";
        break;
      }
      case GateKind::XPhase: {
        if (g.phase == Phase(1, 1))
          out << "x q[" << g.q0 << "];\n";
        else
          out << "rx(" << g.phase.num() << "*pi/" << g.phase.den() << ") q["
              << g.q0 << "];\n";
        break;
      }
      case GateKind::Cnot:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::Cz:
        out << "cz q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
    }
  }
  return out.str();
}

}  // namespace zxopt
