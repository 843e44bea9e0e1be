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

#include <gtest/gtest.h>

#include <json.hpp>

#include "qftkron/serialize.hpp"

using namespace qftkron;
using nlohmann::json;

namespace {

FormatError::Code error_code(const std::string& doc) {
  try {
    deserialize_circuit(doc);
  } catch (const FormatError& e) {
    return e.code();
  }
  ADD_FAILURE() << "document was accepted";
  return FormatError::Code::kMalformed;
}

}  // namespace

TEST(CircuitJson, EmptyRoundTrip) {
  const Circuit c{3, 2, {}};
  EXPECT_EQ(deserialize_circuit(serialize(c)), c);
}

TEST(CircuitJson, QftRoundTrip) {
  const Circuit c = lower_to_circuit(qft_plan(3, 2, Orientation::kTargetFirst));
  EXPECT_EQ(deserialize_circuit(serialize(c)), c);
  const Circuit inv = inverse(lower_to_circuit(qft_plan(3, 3, Orientation::kControlFirst)));
  EXPECT_EQ(deserialize_circuit(serialize(inv)), inv);
}

TEST(CircuitJson, Envelope) {
  const json doc = json::parse(serialize(Circuit{2, 2, {Gate::cnot(0, 1)}}));
  EXPECT_EQ(doc["format"], "qftkron.circuit");
  EXPECT_EQ(doc["version"], 1);
  EXPECT_EQ(doc["wire_base"], 0);
  EXPECT_EQ(doc["gates"][0]["kind"], "cnot");
  EXPECT_EQ(doc["gates"][0]["control"], 0);
  EXPECT_EQ(doc["gates"][0]["target"], 1);
}

TEST(CircuitJson, ControlEqualsTarget) {
  const std::string doc = R"({"format":"qftkron.circuit","version":1,"n":2,"d":2,
    "gates":[{"kind":"controlled_r","control":1,"target":1,"level":2}]})";
  EXPECT_EQ(error_code(doc), FormatError::Code::kWireConflict);
}

TEST(CircuitJson, Rejections) {
  EXPECT_EQ(error_code("not json"), FormatError::Code::kMalformed);
  EXPECT_EQ(error_code(R"({"format":"qftkron.plan","version":1,"n":1,"d":2,"gates":[]})"),
            FormatError::Code::kMalformed);
  EXPECT_EQ(error_code(R"({"format":"qftkron.circuit","version":1,"n":1,"d":2,
    "gates":[{"kind":"toffoli","target":0}]})"),
            FormatError::Code::kUnknownKind);
  EXPECT_EQ(error_code(R"({"format":"qftkron.circuit","version":1,"n":2,"d":2,
    "gates":[{"kind":"hadamard","target":2}]})"),
            FormatError::Code::kWireRange);
  EXPECT_EQ(error_code(R"({"format":"qftkron.circuit","version":1,"n":2,"d":2,
    "gates":[{"kind":"hadamard","target":-1}]})"),
            FormatError::Code::kMalformed);
}

TEST(PlanJson, RoundTripRebuildsOperators) {
  for (const auto& plan : {qft_plan(3, 2, Orientation::kTargetFirst),
                           qft_plan(2, 3, Orientation::kControlFirst), fft_plan(3, 2)}) {
    const FactorizationPlan back = deserialize_plan(serialize(plan));
    EXPECT_EQ(back.n, plan.n);
    EXPECT_EQ(back.kind, plan.kind);
    EXPECT_EQ(back.orientation, plan.orientation);
    EXPECT_EQ(back.reversal, plan.reversal);
    ASSERT_EQ(back.factors.size(), plan.factors.size());
    for (std::size_t i = 0; i < plan.factors.size(); ++i) {
      EXPECT_EQ(back.factors[i].label(), plan.factors[i].label());
      EXPECT_EQ(back.factors[i].op, plan.factors[i].op);
    }
  }
}

TEST(PlanJson, TamperedLevelChangesPlan) {
  json doc = json::parse(serialize(qft_plan(3, 2, Orientation::kTargetFirst)));
  ASSERT_EQ(doc["factors"][1]["role"], "controlled_phase");
  doc["factors"][1]["level"] = doc["factors"][1]["level"].get<int>() - 1;
  const FactorizationPlan tampered = deserialize_plan(doc.dump());
  EXPECT_GT(verify_plan(tampered).residual, 0.1);
}

TEST(PlanJson, Rejections) {
  json doc = json::parse(serialize(qft_plan(2, 2, Orientation::kTargetFirst)));
  doc["factors"][1]["target"] = 5;
  EXPECT_THROW(deserialize_plan(doc.dump()), FormatError);
  doc = json::parse(serialize(qft_plan(2, 2, Orientation::kTargetFirst)));
  doc["factors"][0]["role"] = "mystery";
  EXPECT_THROW(deserialize_plan(doc.dump()), FormatError);
}

TEST(Names, OrientationAndKind) {
  EXPECT_EQ(parse_orientation("control-first"), Orientation::kControlFirst);
  EXPECT_EQ(parse_orientation(to_string(Orientation::kTargetFirst)), Orientation::kTargetFirst);
  EXPECT_EQ(parse_plan_kind("fft"), PlanKind::kFft);
  EXPECT_THROW(parse_plan_kind("dct"), std::invalid_argument);
}
