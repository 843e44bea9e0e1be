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

#include "oracle.hpp"
#include "qftkron/circuit.hpp"

using namespace qftkron;

namespace {

Circuit qft_circuit(std::size_t n, std::size_t d = 2, SwapStyle style = SwapStyle::kKeepSwap,
                    Orientation o = Orientation::kTargetFirst) {
  return lower_to_circuit(qft_plan(n, d, o), style);
}

DenseMatrix pauli_x() { return DenseMatrix{{0.0, 1.0}, {1.0, 0.0}}; }

DenseMatrix swap_matrix(std::size_t d) {
  DenseMatrix s(d * d, d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
  return s;
}

}  // namespace

TEST(Lower, SingleSite) {
  const Circuit c = qft_circuit(1);
  ASSERT_EQ(c.gates.size(), 1u);
  EXPECT_EQ(c.gates[0], Gate::hadamard(0));
}

TEST(Lower, ThreeQubitSequence) {
  const Circuit c = qft_circuit(3);
  const std::vector<Gate> want{Gate::hadamard(0),        Gate::controlled_r(2, 0, 3),
                               Gate::controlled_r(1, 0, 2), Gate::hadamard(1),
                               Gate::controlled_r(2, 1, 2), Gate::hadamard(2),
                               Gate::swap(0, 2)};
  EXPECT_EQ(c.gates, want);
}

TEST(Lower, ThreeCnotSwaps) {
  const Circuit c = qft_circuit(2, 2, SwapStyle::kThreeCnot);
  const std::vector<Gate> tail(c.gates.end() - 3, c.gates.end());
  EXPECT_EQ(tail, (std::vector<Gate>{Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cnot(0, 1)}));
}

TEST(Lower, Rejections) {
  EXPECT_THROW(lower_to_circuit(fft_plan(3, 2)), std::invalid_argument);
  EXPECT_THROW(lower_to_circuit(qft_plan(3, 3, Orientation::kTargetFirst), SwapStyle::kThreeCnot),
               std::invalid_argument);
}

TEST(Lower, QutritsUseFourierGates) {
  const Circuit c = qft_circuit(2, 3);
  EXPECT_EQ(c.gates[0].kind, GateKind::kFourier);
  EXPECT_LT(max_abs_diff(gate_local_matrix(c.gates[0], 3), oracle::dft(3)), 1e-15);
}

TEST(Simulate, ThreeQubitsAgainstDense) {
  std::mt19937_64 rng(71);
  const auto x = oracle::random_vector(8, rng);
  EXPECT_LT(max_abs_diff(simulate_dense(qft_circuit(3), x), oracle::dft_apply(x)), 1e-11);
  const auto c = qft_circuit(3, 2, SwapStyle::kThreeCnot);
  EXPECT_LT(max_abs_diff(simulate_dense(c, x), oracle::dft_apply(x)), 1e-11);
}

TEST(Simulate, EmptyCircuit) {
  std::mt19937_64 rng(72);
  const auto x = oracle::random_vector(9, rng);
  EXPECT_EQ(simulate_dense(Circuit{2, 3, {}}, x), x);
}

TEST(Simulate, BasisZeroIsUniform) {
  const DenseVector y = simulate_dense(qft_circuit(3), DenseVector::basis(8, 0));
  for (std::size_t j = 0; j < 8; ++j) EXPECT_LT(std::abs(y[j] - 1.0 / std::sqrt(8.0)), 1e-15);
}

TEST(Simulate, InverseRoundTrip) {
  std::mt19937_64 rng(73);
  for (std::size_t d : {2u, 3u}) {
    const Circuit c = qft_circuit(3, d);
    const auto x = oracle::random_vector(oracle::ipow(d, 3), rng);
    EXPECT_LT(max_abs_diff(simulate_dense(inverse(c), simulate_dense(c, x)), x), 1e-11);
    EXPECT_LT(max_abs_diff(simulate_dense(inverse(c), x), oracle::dft_apply(x, true)), 1e-11);
  }
}

TEST(Simulate, UnitaryMatchesDft) {
  EXPECT_LT(max_abs_diff(circuit_unitary(qft_circuit(4)), oracle::dft(16)), 1e-12);
  EXPECT_LT(max_abs_diff(circuit_unitary(qft_circuit(2, 5)), oracle::dft(25)), 1e-12);
}

TEST(GateUnitary, CnotIsProjectorSum) {
  const DenseMatrix want =
      oracle::kron(oracle::diag({1.0, 0.0}), oracle::identity(2)) +
      oracle::kron(oracle::diag({0.0, 1.0}), pauli_x());
  EXPECT_EQ(expand(gate_unitary(Gate::cnot(0, 1), 2, 2)), want);
}

TEST(GateUnitary, ThreeCnotsMakeSwap) {
  const DenseMatrix a = expand(gate_unitary(Gate::cnot(0, 1), 2, 2));
  const DenseMatrix b = expand(gate_unitary(Gate::cnot(1, 0), 2, 2));
  EXPECT_EQ(oracle::matmul(a, oracle::matmul(b, a)), swap_matrix(2));
  EXPECT_EQ(expand(gate_unitary(Gate::swap(0, 1), 2, 2)), swap_matrix(2));
  EXPECT_EQ(expand(gate_unitary(Gate::swap(1, 0), 2, 3)), swap_matrix(3));
}

TEST(GateUnitary, ControlledRFourWires) {
  // control wire 1, target wire 3 of 4: I on wires 2 and 4.
  const DenseMatrix want =
      oracle::kron_all({oracle::diag({1.0, 0.0}), oracle::identity(2), oracle::identity(2),
                        oracle::identity(2)}) +
      oracle::kron_all({oracle::diag({0.0, 1.0}), oracle::identity(2),
                        oracle::diag({1.0, oracle::root(8, 1)}), oracle::identity(2)});
  const DenseMatrix got = expand(gate_unitary(Gate::controlled_r(0, 2, 3), 4, 2));
  EXPECT_LT(max_abs_diff(got, want), 1e-15);
  const DenseMatrix twin = expand(gate_unitary(Gate::controlled_r(2, 0, 3), 4, 2));
  EXPECT_LT(max_abs_diff(got, twin), 1e-15);
}

TEST(GateUnitary, SumGateShiftsCyclically) {
  const DenseMatrix x = gate_local_matrix(Gate::not_x(0), 3);
  EXPECT_EQ(x(1, 0), cplx(1.0));
  EXPECT_EQ(x(2, 1), cplx(1.0));
  EXPECT_EQ(x(0, 2), cplx(1.0));
}

TEST(GateCounts, FourQubitsThreeCnot) {
  const GateCounts g = count_gates(qft_circuit(4, 2, SwapStyle::kThreeCnot));
  EXPECT_EQ(g.hadamard_or_fourier, 4u);
  EXPECT_EQ(g.controlled_r, 6u);
  EXPECT_EQ(g.cnot, 6u);
  EXPECT_EQ(g.swap, 0u);
}

TEST(GateCounts, FiveQubits) {
  const GateCounts g = count_gates(qft_circuit(5));
  EXPECT_EQ(g.controlled_r, 10u);
  EXPECT_EQ(g.swap, 2u);
}

TEST(GateCounts, SingleQubit) {
  EXPECT_EQ(count_gates(qft_circuit(1)), (GateCounts{1, 0, 0, 0, 0, 0}));
}

TEST(GateCounts, QuotedAndConstruction) {
  EXPECT_EQ(quoted_cnot_count(3), 4u);
  EXPECT_EQ(construction_cnot_count(3), 3u);
  for (std::size_t n = 2; n <= 32; n += 2) EXPECT_EQ(quoted_cnot_count(n), construction_cnot_count(n));
}

TEST(Variants, EmptySelectionGivesOriginal) {
  const Circuit c = qft_circuit(3);
  VariantOptions opts;
  opts.policy = VariantPolicy::kSwapControlTarget;
  opts.selection = std::vector<std::size_t>{};
  const auto v = equivalent_variants(c, opts);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], c);
}

TEST(Variants, AllFlipsAgree) {
  const Circuit c = qft_circuit(3);
  VariantOptions opts;
  opts.policy = VariantPolicy::kSwapControlTarget;
  const auto v = equivalent_variants(c, opts);
  ASSERT_EQ(v.size(), 8u);
  EXPECT_EQ(v[0], c);
  const DenseMatrix u = circuit_unitary(c);
  for (std::size_t i = 1; i < v.size(); ++i) {
    EXPECT_NE(v[i], c);
    EXPECT_LT(max_abs_diff(circuit_unitary(v[i]), u), 1e-12);
  }
  // mask 1 flips the first controlled-R gate only
  EXPECT_EQ(v[1].gates[1], Gate::controlled_r(0, 2, 3));
}

TEST(Variants, ReorderedRunsAgree) {
  const Circuit c = qft_circuit(3);
  VariantOptions opts;
  opts.policy = VariantPolicy::kShuffleCommutingCR;
  const auto v = equivalent_variants(c, opts);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[1].gates[1], c.gates[2]);
  EXPECT_EQ(v[1].gates[2], c.gates[1]);
  EXPECT_LT(max_abs_diff(circuit_unitary(v[1]), circuit_unitary(c)), 1e-12);
}

TEST(Variants, SampledWhenLarge) {
  const Circuit c = qft_circuit(6);
  VariantOptions opts;
  opts.max_variants = 20;
  opts.seed = 5;
  const auto a = equivalent_variants(c, opts), b = equivalent_variants(c, opts);
  ASSERT_EQ(a.size(), 20u);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[0], c);
  const DenseMatrix u = circuit_unitary(c);
  for (const auto& v : a) EXPECT_LT(max_abs_diff(circuit_unitary(v), u), 1e-12);
}

TEST(Render, SingleGateOnTwoWires) {
  const std::string text = render_text(Circuit{2, 2, {Gate::hadamard(0)}});
  EXPECT_EQ(text, "q1: --[H]--\n\nq2: -------\n");
}

TEST(Render, TwoQubitQft) {
  const std::string want =
      "q1: --[H]--[R2]-------x--\n"
      "            |         |\n"
      "q2: --------*----[H]--x--\n";
  EXPECT_EQ(render_text(qft_circuit(2)), want);
}

TEST(Render, SingleSiteQft) { EXPECT_EQ(render_text(qft_circuit(1)), "q1: --[H]--\n"); }

TEST(Validate, RejectsBadGates) {
  EXPECT_THROW((Circuit{2, 2, {Gate::hadamard(2)}}.validate()), std::invalid_argument);
  EXPECT_THROW((Circuit{2, 2, {Gate::cnot(1, 1)}}.validate()), std::invalid_argument);
  EXPECT_THROW((Circuit{2, 3, {Gate::hadamard(0)}}.validate()), std::invalid_argument);
  EXPECT_THROW((Circuit{2, 2, {Gate::controlled_r(0, 1, 0)}}.validate()), std::invalid_argument);
}
