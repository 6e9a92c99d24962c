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

#include "zxopt/rewrite_step.hpp"

#include <sstream>

#include "json.hpp"

namespace zxopt {

const char* rule_name(RuleKind k) {
  switch (k) {
    case RuleKind::Fusion: return "fusion";
    case RuleKind::Identity: return "identity";
    case RuleKind::ColorChange: return "color_change";
    case RuleKind::Hopf: return "hopf";
    case RuleKind::LcSimp: return "lc_simp";
    case RuleKind::PivotSimp: return "pivot_simp";
    case RuleKind::CongruenceLC: return "congruence_lc";
    case RuleKind::CongruencePivot: return "congruence_pivot";
  }
  return "?";
}

namespace {

RuleKind rule_from_name(const std::string& s) {
  for (int k = 0; k <= static_cast<int>(RuleKind::CongruencePivot); ++k) {
    if (s == rule_name(static_cast<RuleKind>(k)))
      return static_cast<RuleKind>(k);
  }
  throw std::invalid_argument("unknown rule name " + s);
}

}  // namespace

std::string steps_to_jsonl(const std::vector<RewriteStep>& steps) {
  std::ostringstream out;
  for (const RewriteStep& s : steps) {
    nlohmann::json j;
    j["rule"] = rule_name(s.rule);
    j["subjects"] = s.subjects;
    j["timestamp"] = s.timestamp;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::vector<RewriteStep> steps_from_jsonl(const std::string& text) {
  std::vector<RewriteStep> steps;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    RewriteStep s;
    s.rule = rule_from_name(j.at("rule").get<std::string>());
    s.subjects = j.at("subjects").get<std::vector<VertexId>>();
    s.timestamp = j.at("timestamp").get<std::uint64_t>();
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace zxopt
