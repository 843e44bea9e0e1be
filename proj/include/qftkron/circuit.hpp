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

#ifndef QFTKRON_CIRCUIT_HPP
#define QFTKRON_CIRCUIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qftkron/factorizer.hpp"

namespace qftkron {

enum class GateKind {
  kHadamard,       // F_2, qubits only
  kFourier,        // F_d
  kPhaseR,         // R_level
  kNotX,           // cyclic shift |j> -> |j+1 mod d>
  kControlledR,    // sum_l E_l kron R_level^l
  kControlledNot,  // CNOT for d = 2, SUM gate for d > 2
  kSwap,
};

/// A gate on 0-based wires. Controlled gates use `control`; for kSwap the
/// second wire is stored in `control` and the gate is symmetric in them.
struct Gate {
  GateKind kind;
  std::size_t target = 0;
  std::optional<std::size_t> control;
  std::size_t level = 0;
  bool adjoint = false;

  static Gate hadamard(std::size_t target) { return {GateKind::kHadamard, target, std::nullopt}; }
  static Gate fourier(std::size_t target) { return {GateKind::kFourier, target, std::nullopt}; }
  static Gate phase_r(std::size_t target, std::size_t level) {
    return {GateKind::kPhaseR, target, std::nullopt, level};
  }
  static Gate not_x(std::size_t target) { return {GateKind::kNotX, target, std::nullopt}; }
  static Gate controlled_r(std::size_t control, std::size_t target, std::size_t level) {
    return {GateKind::kControlledR, target, control, level};
  }
  static Gate cnot(std::size_t control, std::size_t target) {
    return {GateKind::kControlledNot, target, control};
  }
  static Gate swap(std::size_t a, std::size_t b) { return {GateKind::kSwap, a, b}; }

  bool is_two_wire() const { return control.has_value(); }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gates on n wires of d levels, applied in list order.
struct Circuit {
  std::size_t n = 0;
  std::size_t d = 2;
  std::vector<Gate> gates;

  /// Throws std::invalid_argument on an out-of-range wire, a control equal
  /// to its target, a Hadamard with d != 2 or a missing R level.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

enum class SwapStyle { kKeepSwap, kThreeCnot };

/// Turns a QFT plan into gates: per block one Fourier (Hadamard when d = 2)
/// and its controlled-R ladder, then floor(n/2) swaps for the digit reversal.
Circuit lower_to_circuit(const FactorizationPlan& plan, SwapStyle style = SwapStyle::kKeepSwap);

/// The gate's d x d (single wire) matrix, or its target matrix U for
/// controlled gates. Not defined for kSwap.
DenseMatrix gate_local_matrix(const Gate& g, std::size_t d);

/// The gate embedded on n wires. Controlled gates give d terms, E_l on the
/// control and U^l on the target.
StructuredOperator gate_unitary(const Gate& g, std::size_t n, std::size_t d);

DenseVector simulate_dense(const Circuit& c, const DenseVector& x,
                           std::size_t dense_limit = kDefaultDenseLimit);

/// Columns are simulate_dense on basis vectors.
DenseMatrix circuit_unitary(const Circuit& c, std::size_t dense_limit = kDefaultDenseLimit);

/// Reversed gate order with every gate replaced by its adjoint.
Circuit inverse(const Circuit& c);

struct GateCounts {
  std::size_t hadamard_or_fourier = 0;
  std::size_t phase_r = 0;
  std::size_t not_x = 0;
  std::size_t controlled_r = 0;
  std::size_t cnot = 0;
  std::size_t swap = 0;

  std::size_t total() const {
    return hadamard_or_fourier + phase_r + not_x + controlled_r + cnot + swap;
  }

  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

GateCounts count_gates(const Circuit& c);

/// The commonly quoted CNOT figure for the reversal, floor(3n/2). The
/// three-CNOT swap construction gives 3*floor(n/2), which differs for odd n.
inline std::size_t quoted_cnot_count(std::size_t n) { return (3 * n) / 2; }
inline std::size_t construction_cnot_count(std::size_t n) { return 3 * (n / 2); }

enum class VariantPolicy { kSwapControlTarget, kShuffleCommutingCR, kBoth };

struct VariantOptions {
  VariantPolicy policy = VariantPolicy::kBoth;
  std::uint64_t seed = 0;
  /// Enumerate every variant when there are at most this many, otherwise
  /// draw this many (the original first) from the seeded generator.
  std::size_t max_variants = 256;
  /// Gate indices allowed to change. Unset means every ControlledR gate.
  std::optional<std::vector<std::size_t>> selection;
};

/// Circuits equal to `c` as unitaries, obtained by exchanging control and
/// target of ControlledR gates and reordering runs of adjacent ControlledR
/// gates. The first entry is always `c`.
///
/// Enumeration order: orderings of the runs in lexicographic order (first
/// run most significant), and within each ordering the flip masks
/// 0 .. 2^m - 1, bit b flipping the b-th selected gate.
std::vector<Circuit> equivalent_variants(const Circuit& c, const VariantOptions& options = {});

/// ASCII diagram, one row per wire (q1 at the top), one column per gate,
/// control dots joined to targets by vertical bars. One-way: there is no
/// parser for this format.
std::string render_text(const Circuit& c);

std::string to_string(GateKind kind);

}  // namespace qftkron

#endif  // QFTKRON_CIRCUIT_HPP
