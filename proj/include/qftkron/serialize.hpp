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

#ifndef QFTKRON_SERIALIZE_HPP
#define QFTKRON_SERIALIZE_HPP

// JSON documents for circuits and plans. Both share one envelope:
//
//   {"format": "qftkron.circuit" | "qftkron.plan", "version": 1,
//    "wire_base": 0, "n": <wires>, "d": <levels>, ...}
//
// Circuit body:  "gates": [{"kind", "target", "control"?, "level"?, "adjoint"?}]
//   kind is one of hadamard, fourier, phase_r, not, controlled_r, cnot, swap.
//   Wires are 0-based. A swap stores its second wire in "control".
// Plan body:     "kind": "fft" | "qft", "orientation": "control_first" |
//   "target_first", "factors": [{"role", "label", "support", "terms", ...}],
//   "reversal": {"type": "digit_reversal", "swaps": floor(n/2)}
//   Factor parameters: fft_stage {"stage"}, fourier {"site"},
//   controlled_phase {"control", "target", "level"}. Operators are rebuilt
//   from the parameters on load; "label", "support" and "terms" are
//   informational.

#include <stdexcept>
#include <string>

#include "qftkron/circuit.hpp"

namespace qftkron {

inline constexpr int kDocumentVersion = 1;

class FormatError : public std::runtime_error {
 public:
  enum class Code { kMalformed, kUnknownKind, kWireRange, kWireConflict };

  FormatError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

std::string serialize(const Circuit& c, int indent = 2);
Circuit deserialize_circuit(const std::string& document);

std::string serialize(const FactorizationPlan& plan, int indent = 2);
FactorizationPlan deserialize_plan(const std::string& document);

std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& s);
std::string to_string(PlanKind k);
PlanKind parse_plan_kind(const std::string& s);

}  // namespace qftkron

#endif  // QFTKRON_SERIALIZE_HPP
