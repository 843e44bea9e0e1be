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

#include "qftkron/serialize.hpp"

#include <json.hpp>

namespace qftkron {

using nlohmann::json;

namespace {

constexpr const char* kCircuitFormat = "qftkron.circuit";
constexpr const char* kPlanFormat = "qftkron.plan";

[[noreturn]] void malformed(const std::string& what) {
  throw FormatError(FormatError::Code::kMalformed, what);
}

json parse_document(const std::string& document, const char* format) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document is not a JSON object");
  if (!doc.contains("format") || doc["format"] != format)
    malformed(std::string("expected format \"") + format + "\"");
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != kDocumentVersion)
    malformed("unsupported document version");
  if (doc.contains("wire_base") && doc["wire_base"] != 0) malformed("wire_base must be 0");
  return doc;
}

std::size_t get_count(const json& obj, const char* key) {
  if (!obj.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    malformed(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

GateKind parse_gate_kind(const std::string& s) {
  for (GateKind k : {GateKind::kHadamard, GateKind::kFourier, GateKind::kPhaseR,
                     GateKind::kNotX, GateKind::kControlledR, GateKind::kControlledNot,
                     GateKind::kSwap})
    if (to_string(k) == s) return k;
  throw FormatError(FormatError::Code::kUnknownKind, "unknown gate kind \"" + s + "\"");
}

json envelope(const char* format, std::size_t n, std::size_t d) {
  json doc;
  doc["format"] = format;
  doc["version"] = kDocumentVersion;
  doc["wire_base"] = 0;
  doc["n"] = n;
  doc["d"] = d;
  return doc;
}

}  // namespace

std::string to_string(Orientation o) {
  return o == Orientation::kControlFirst ? "control_first" : "target_first";
}

Orientation parse_orientation(const std::string& s) {
  if (s == "control_first" || s == "control-first") return Orientation::kControlFirst;
  if (s == "target_first" || s == "target-first") return Orientation::kTargetFirst;
  throw std::invalid_argument("unknown orientation \"" + s + "\"");
}

std::string to_string(PlanKind k) { return k == PlanKind::kFft ? "fft" : "qft"; }

PlanKind parse_plan_kind(const std::string& s) {
  if (s == "fft") return PlanKind::kFft;
  if (s == "qft") return PlanKind::kQft;
  throw std::invalid_argument("unknown plan kind \"" + s + "\"");
}

std::string serialize(const Circuit& c, int indent) {
  json doc = envelope(kCircuitFormat, c.n, c.d);
  json gates = json::array();
  for (const auto& g : c.gates) {
    json jg;
    jg["kind"] = to_string(g.kind);
    if (g.level > 0) jg["level"] = g.level;
    if (g.control) jg["control"] = *g.control;
    jg["target"] = g.target;
    if (g.adjoint) jg["adjoint"] = true;
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);
  return doc.dump(indent);
}

Circuit deserialize_circuit(const std::string& document) {
  const json doc = parse_document(document, kCircuitFormat);
  Circuit c{get_count(doc, "n"), get_count(doc, "d"), {}};
  if (c.n < 1) malformed("n must be >= 1");
  if (c.d < 2) malformed("d must be >= 2");
  if (!doc.contains("gates") || !doc["gates"].is_array()) malformed("missing gate list");
  for (const auto& jg : doc["gates"]) {
    if (!jg.is_object()) malformed("gate entry is not an object");
    if (!jg.contains("kind") || !jg["kind"].is_string()) malformed("gate without kind");
    Gate g{parse_gate_kind(jg["kind"].get<std::string>()), 0, std::nullopt};
    g.target = get_count(jg, "target");
    if (jg.contains("control")) g.control = get_count(jg, "control");
    if (jg.contains("level")) g.level = get_count(jg, "level");
    if (jg.contains("adjoint")) {
      if (!jg["adjoint"].is_boolean()) malformed("adjoint must be a boolean");
      g.adjoint = jg["adjoint"].get<bool>();
    }
    if (g.target >= c.n || (g.control && *g.control >= c.n))
      throw FormatError(FormatError::Code::kWireRange, "gate wire out of range");
    if (g.control && *g.control == g.target)
      throw FormatError(FormatError::Code::kWireConflict, "gate control equals its target");
    c.gates.push_back(g);
  }
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  return c;
}

std::string serialize(const FactorizationPlan& plan, int indent) {
  json doc = envelope(kPlanFormat, plan.n, plan.d);
  doc["kind"] = to_string(plan.kind);
  doc["orientation"] = to_string(plan.orientation);
  json factors = json::array();
  for (const auto& f : plan.factors) {
    json jf;
    jf["label"] = f.label();
    switch (f.role) {
      case FactorRole::kFftStage:
        jf["role"] = "fft_stage";
        jf["stage"] = f.stage;
        break;
      case FactorRole::kFourier:
        jf["role"] = "fourier";
        jf["site"] = f.site;
        break;
      case FactorRole::kControlledPhase:
        jf["role"] = "controlled_phase";
        jf["control"] = f.control;
        jf["target"] = f.target;
        jf["level"] = f.level;
        break;
    }
    jf["support"] = f.op.support();
    jf["terms"] = f.op.terms().size();
    factors.push_back(std::move(jf));
  }
  doc["factors"] = std::move(factors);
  doc["reversal"] = {{"type", "digit_reversal"}, {"swaps", plan.reversal.swap_count()}};
  return doc.dump(indent);
}

FactorizationPlan deserialize_plan(const std::string& document) {
  const json doc = parse_document(document, kPlanFormat);
  const std::size_t n = get_count(doc, "n");
  const std::size_t d = get_count(doc, "d");
  if (n < 1) malformed("n must be >= 1");
  if (d < 2) malformed("d must be >= 2");
  FactorizationPlan plan{n, d, PlanKind::kQft, Orientation::kTargetFirst, {}, {n, d}};
  try {
    plan.kind = parse_plan_kind(doc.value("kind", std::string{}));
    plan.orientation = parse_orientation(doc.value("orientation", std::string{}));
  } catch (const std::invalid_argument& e) {
    malformed(e.what());
  }
  if (!doc.contains("factors") || !doc["factors"].is_array()) malformed("missing factor list");
  for (const auto& jf : doc["factors"]) {
    if (!jf.is_object() || !jf.contains("role") || !jf["role"].is_string())
      malformed("factor without role");
    const std::string role = jf["role"].get<std::string>();
    try {
      if (role == "fft_stage") {
        plan.factors.push_back(PlanFactor::fft_stage(n, d, get_count(jf, "stage")));
      } else if (role == "fourier") {
        plan.factors.push_back(PlanFactor::fourier(n, d, get_count(jf, "site")));
      } else if (role == "controlled_phase") {
        const std::size_t control = get_count(jf, "control");
        const std::size_t target = get_count(jf, "target");
        if (control >= n || target >= n)
          throw FormatError(FormatError::Code::kWireRange, "factor wire out of range");
        if (control == target)
          throw FormatError(FormatError::Code::kWireConflict, "factor control equals its target");
        plan.factors.push_back(
            PlanFactor::controlled_phase(n, d, control, target, get_count(jf, "level")));
      } else {
        throw FormatError(FormatError::Code::kUnknownKind, "unknown factor role \"" + role + "\"");
      }
    } catch (const std::out_of_range& e) {
      throw FormatError(FormatError::Code::kWireRange, e.what());
    } catch (const std::invalid_argument& e) {
      malformed(e.what());
    }
  }
  return plan;
}

}  // namespace qftkron
