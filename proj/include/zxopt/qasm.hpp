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

#pragma once

#include <stdexcept>
#include <string>

#include "zxopt/circuit.hpp"

namespace zxopt {

/// Parse failure, carrying the 1-based line number of the offending
/// statement.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses the circuit-file format: a `qreg q[N];` header followed by one
/// `;`-terminated statement per line. Statements are h, t, tdg, s, sdg, z,
/// x, rz(n*pi/d), rx(n*pi/d), cx and cz. `//` starts a comment. Gate order
/// is preserved exactly.
Circuit parse_circuit(const std::string& text);

/// Inverse of parse_circuit: parse_circuit(emit_circuit(c)) == c gate for
/// gate. Phase gates are written with the shortest alias (t, s, z, ...)
/// when one exists.
std::string emit_circuit(const Circuit& c);

}  // namespace zxopt
