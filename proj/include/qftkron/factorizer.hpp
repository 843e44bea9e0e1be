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

#ifndef QFTKRON_FACTORIZER_HPP
#define QFTKRON_FACTORIZER_HPP

#include <string>
#include <vector>

#include "qftkron/permutation.hpp"
#include "qftkron/spectral.hpp"
#include "qftkron/structured.hpp"

namespace qftkron {

enum class PlanKind { kFft, kQft };

/// Which site of a controlled-R factor carries the projectors E_l.
/// kControlFirst: projectors on the block's leading site, R^l on the later
/// site. kTargetFirst: the reverse. Both are the same matrix.
enum class Orientation { kControlFirst, kTargetFirst };

enum class FactorRole {
  kFftStage,         // A^(k) = I kron B_(k+1), radix-d butterfly with twiddles
  kFourier,          // F_d on one site
  kControlledPhase,  // sum_l E_l (control) kron R_level^l (target)
};

/// One factor of a plan together with the parameters it was built from.
/// Sites are 0-based; site 0 is the most significant digit.
struct PlanFactor {
  FactorRole role;
  std::size_t stage = 0;
  std::size_t site = 0;
  std::size_t control = 0;
  std::size_t target = 0;
  std::size_t level = 0;
  StructuredOperator op;

  static PlanFactor fft_stage(std::size_t n, std::size_t d, std::size_t k);
  static PlanFactor fourier(std::size_t n, std::size_t d, std::size_t site);
  static PlanFactor controlled_phase(std::size_t n, std::size_t d, std::size_t control,
                                     std::size_t target, std::size_t level);

  /// "A(k)", "F(q2)", "CR3(q3->q1)"; wires printed 1-based.
  std::string label() const;
};

/// F_(d^n) = reversal * (product of factors), with factors stored in
/// application order: factors.front() acts on the input first.
struct FactorizationPlan {
  std::size_t n;
  std::size_t d;
  PlanKind kind;
  Orientation orientation;
  std::vector<PlanFactor> factors;
  SiteReversal reversal;
};

/// The k factors of I + Omega_k + ... + Omega_k^(d-1) on k+1 sites; factor
/// i-1 couples site 0 with site i through R_(i+1).
struct DiagonalDecomposition {
  std::size_t k;
  std::size_t d;
  Orientation orientation;
  std::vector<StructuredOperator> factors;
};

/// Operator sum_l E_l (control) kron R_level^l (target) on n sites.
StructuredOperator controlled_phase_operator(std::size_t n, std::size_t d, std::size_t control,
                                             std::size_t target, std::size_t level);

/// A^(k) = I_(d^(n-k-1)) kron B_(k+1) with
/// B_(k+1) = (I + Omega_k + ... + Omega_k^(d-1)) (F_d kron I_(d^k)).
StructuredOperator fft_stage_operator(std::size_t n, std::size_t d, std::size_t k);

FactorizationPlan fft_plan(std::size_t n, std::size_t d);
FactorizationPlan qft_plan(std::size_t n, std::size_t d, Orientation orientation);
DiagonalDecomposition diagonal_decomposition(std::size_t k, std::size_t d,
                                             Orientation orientation);

/// Diagonal of I + Omega_k + ... + Omega_k^(d-1): entry l*d^k + r is
/// omega_(d^(k+1))^(l*r).
std::vector<cplx> diagonal_block_entries(std::size_t k, std::size_t d,
                                         std::size_t dense_limit = kDefaultDenseLimit);

/// Applies the plan to x without expanding any factor.
DenseVector fft_apply(const FactorizationPlan& plan, const DenseVector& x,
                      Direction dir = Direction::kForward);

/// reversal * (product of factors) as a dense matrix.
DenseMatrix expand_plan(const FactorizationPlan& plan,
                        std::size_t dense_limit = kDefaultDenseLimit);

struct VerifyOptions {
  std::size_t dense_limit = kDefaultDenseLimit;
  bool check_unitarity = true;
};

struct PlanResidual {
  /// max |(P * prod factors - F)_ij|
  double residual = 0.0;
  /// max |(A^H A - I)_ij| per factor, in plan order. Empty if not requested.
  std::vector<double> factor_unitarity;

  double max_unitarity() const;
};

/// Certifies a plan against the DFT column by column. Memory stays O(d^n);
/// the dense limit still bounds the problem size.
PlanResidual verify_plan(const FactorizationPlan& plan, const VerifyOptions& options = {});

/// max |(A^H A - I)_ij| of a structured operator, evaluated on its support.
double structured_unitarity_residual(const StructuredOperator& op);

}  // namespace qftkron

#endif  // QFTKRON_FACTORIZER_HPP
