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

#include <cstdint>
#include <string>
#include <vector>

#include "zxopt/zx_diagram.hpp"

namespace zxopt {

enum class RuleKind {
  Fusion,
  Identity,
  ColorChange,
  Hopf,
  LcSimp,
  PivotSimp,
  CongruenceLC,
  CongruencePivot,
};

const char* rule_name(RuleKind k);

/// One applied rewrite, for replayable traces.
struct RewriteStep {
  RuleKind rule = RuleKind::Fusion;
  std::vector<VertexId> subjects;
  std::uint64_t timestamp = 0;

  bool operator==(const RewriteStep&) const = default;
};

/// JSON-lines serialization: one object per step with fields `rule`,
/// `subjects`, `timestamp`.
std::string steps_to_jsonl(const std::vector<RewriteStep>& steps);
std::vector<RewriteStep> steps_from_jsonl(const std::string& text);

}  // namespace zxopt
