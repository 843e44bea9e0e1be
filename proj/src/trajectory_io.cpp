// Copyright 2026 The qftkron Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "qftkron/cp_state.hpp"

namespace qftkron {

namespace {

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string trajectory_csv(const RankExperimentReport& report) {
  std::ostringstream out;
  out << "step,factor_label,term_count,elapsed_ms\n";
  for (const auto& s : report.steps)
    out << s.step << ',' << s.label << ',' << s.term_count << ',' << fixed3(s.elapsed_ms) << '\n';
  return out.str();
}

std::string trajectory_json(const RankExperimentReport& report, int indent) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["d"] = report.d;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : report.steps) {
    nlohmann::ordered_json js;
    js["step"] = s.step;
    js["factor_label"] = s.label;
    js["term_count"] = s.term_count;
    js["zero_weight_terms"] = s.zero_weight_terms;
    js["elapsed_ms"] = s.elapsed_ms;
    steps.push_back(std::move(js));
  }
  doc["steps"] = std::move(steps);
  doc["final_term_count"] = report.final_term_count;
  doc["residual"] = report.residual;
  return doc.dump(indent);
}

}  // namespace qftkron
