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

#include "qftkron/factorizer.hpp"

#include <algorithm>
#include <cmath>

namespace qftkron {

namespace {

void check_shape(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("plans need n >= 1");
  if (d < 2) throw std::invalid_argument("plans need d >= 2");
}

}  // namespace

StructuredOperator controlled_phase_operator(std::size_t n, std::size_t d, std::size_t control,
                                             std::size_t target, std::size_t level) {
  if (control == target) throw std::invalid_argument("control and target must differ");
  if (control >= n || target >= n) throw std::out_of_range("wire out of range");
  std::vector<KronTerm> terms;
  terms.reserve(d);
  for (std::size_t l = 0; l < d; ++l)
    terms.push_back(
        make_term(n, d, 1.0, {{control, projector(d, l)}, {target, r_gate_power(level, d, l)}}));
  return {n, d, std::move(terms)};
}

StructuredOperator fft_stage_operator(std::size_t n, std::size_t d, std::size_t k) {
  check_shape(n, d);
  if (k >= n) throw std::out_of_range("stage index must be < n");
  const std::size_t lead = n - k - 1;
  const DenseMatrix fourier = dft_matrix(d);
  std::vector<KronTerm> terms;
  terms.reserve(d);
  // sum_l (E_l F_d) kron Omega_k^l, with Omega_k^l = R_2^l kron ... kron R_(k+1)^l.
  for (std::size_t l = 0; l < d; ++l) {
    std::map<std::size_t, DenseMatrix> local{{lead, projector(d, l) * fourier}};
    for (std::size_t i = 1; i <= k; ++i) local.emplace(lead + i, r_gate_power(i + 1, d, l));
    terms.push_back(make_term(n, d, 1.0, local));
  }
  return {n, d, std::move(terms)};
}

PlanFactor PlanFactor::fft_stage(std::size_t n, std::size_t d, std::size_t k) {
  PlanFactor f{FactorRole::kFftStage, k, 0, 0, 0, 0, fft_stage_operator(n, d, k)};
  return f;
}

PlanFactor PlanFactor::fourier(std::size_t n, std::size_t d, std::size_t site) {
  check_shape(n, d);
  if (site >= n) throw std::out_of_range("wire out of range");
  return {FactorRole::kFourier, 0, site, 0, 0, 0,
          StructuredOperator::local(n, d, site, dft_matrix(d))};
}

PlanFactor PlanFactor::controlled_phase(std::size_t n, std::size_t d, std::size_t control,
                                        std::size_t target, std::size_t level) {
  check_shape(n, d);
  if (level < 1) throw std::invalid_argument("R level must be >= 1");
  return {FactorRole::kControlledPhase, 0, 0, control, target, level,
          controlled_phase_operator(n, d, control, target, level)};
}

std::string PlanFactor::label() const {
  switch (role) {
    case FactorRole::kFftStage:
      return "A(" + std::to_string(stage) + ")";
    case FactorRole::kFourier:
      return "F(q" + std::to_string(site + 1) + ")";
    case FactorRole::kControlledPhase:
      return "CR" + std::to_string(level) + "(q" + std::to_string(control + 1) + "->q" +
             std::to_string(target + 1) + ")";
  }
  return "?";
}

FactorizationPlan fft_plan(std::size_t n, std::size_t d) {
  check_shape(n, d);
  FactorizationPlan plan{n, d, PlanKind::kFft, Orientation::kControlFirst, {}, {n, d}};
  // A^(n-1) acts first.
  for (std::size_t k = n; k-- > 0;) plan.factors.push_back(PlanFactor::fft_stage(n, d, k));
  return plan;
}

FactorizationPlan qft_plan(std::size_t n, std::size_t d, Orientation orientation) {
  check_shape(n, d);
  FactorizationPlan plan{n, d, PlanKind::kQft, orientation, {}, {n, d}};
  plan.factors.reserve(n + n * (n - 1) / 2);
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t lead = n - k - 1;
    plan.factors.push_back(PlanFactor::fourier(n, d, lead));
    // Largest level first, as in the textbook circuit; the factors commute.
    for (std::size_t i = k; i >= 1; --i) {
      const std::size_t other = lead + i;
      if (orientation == Orientation::kControlFirst)
        plan.factors.push_back(PlanFactor::controlled_phase(n, d, lead, other, i + 1));
      else
        plan.factors.push_back(PlanFactor::controlled_phase(n, d, other, lead, i + 1));
    }
  }
  return plan;
}

DiagonalDecomposition diagonal_decomposition(std::size_t k, std::size_t d,
                                             Orientation orientation) {
  if (k < 1) throw std::invalid_argument("diagonal decomposition needs k >= 1");
  if (d < 2) throw std::invalid_argument("diagonal decomposition needs d >= 2");
  DiagonalDecomposition out{k, d, orientation, {}};
  out.factors.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) {
    if (orientation == Orientation::kControlFirst)
      out.factors.push_back(controlled_phase_operator(k + 1, d, 0, i, i + 1));
    else
      out.factors.push_back(controlled_phase_operator(k + 1, d, i, 0, i + 1));
  }
  return out;
}

std::vector<cplx> diagonal_block_entries(std::size_t k, std::size_t d, std::size_t dense_limit) {
  const std::size_t dim = dense_dim(d, k + 1, dense_limit);
  const std::size_t block = dim / d;
  const std::uint64_t modulus = dim;
  std::vector<cplx> diag(dim);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t r = 0; r < block; ++r)
      diag[l * block + r] = omega(modulus, static_cast<std::int64_t>((l * r) % modulus));
  return diag;
}

DenseVector fft_apply(const FactorizationPlan& plan, const DenseVector& x, Direction dir) {
  const std::uint64_t dim = checked_pow(plan.d, plan.n);
  if (x.dim() != dim) throw std::invalid_argument("vector dimension is not d^n");
  DenseVector y = x;
  if (dir == Direction::kForward) {
    for (const auto& f : plan.factors) y = apply_structured(f.op, y);
    if (!plan.reversal.is_identity()) y = permute_tensor_factors(y, plan.n, plan.d);
  } else {
    // F^H = (prod factors)^H P, and P is an involution.
    if (!plan.reversal.is_identity()) y = permute_tensor_factors(y, plan.n, plan.d);
    for (auto it = plan.factors.rbegin(); it != plan.factors.rend(); ++it)
      y = apply_structured(it->op.adjoint(), y);
  }
  return y;
}

DenseMatrix expand_plan(const FactorizationPlan& plan, std::size_t dense_limit) {
  const std::size_t dim = dense_dim(plan.d, plan.n, dense_limit);
  DenseMatrix product = DenseMatrix::identity(dim);
  for (const auto& f : plan.factors) product = expand(f.op, dense_limit) * product;
  return plan.reversal.materialize().matrix() * product;
}

double PlanResidual::max_unitarity() const {
  double out = 0.0;
  for (double r : factor_unitarity) out = std::max(out, r);
  return out;
}

double structured_unitarity_residual(const StructuredOperator& op) {
  const auto sites = op.support();
  if (sites.empty()) {
    // Pure identity up to the summed coefficient.
    cplx c = 0.0;
    for (const auto& t : op.terms()) c += t.coefficient;
    return std::abs(std::norm(c) - 1.0);
  }
  const StructuredOperator local = op.restricted(sites);
  const StructuredOperator local_adj = local.adjoint();
  const auto dim = static_cast<std::size_t>(local.dim());
  double worst = 0.0;
  const long long cols = static_cast<long long>(dim);
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (long long jj = 0; jj < cols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    const DenseVector ej = DenseVector::basis(dim, j);
    const DenseVector back = apply_structured(local_adj, apply_structured(local, ej));
    worst = std::max(worst, max_abs_diff(back, ej));
  }
  return worst;
}

PlanResidual verify_plan(const FactorizationPlan& plan, const VerifyOptions& options) {
  const std::size_t dim = dense_dim(plan.d, plan.n, options.dense_limit);
  PlanResidual report;
  std::vector<cplx> roots(dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t m = 0; m < dim; ++m) roots[m] = omega(dim, static_cast<std::int64_t>(m)) * scale;

  std::vector<SparseMatrix> factors;
  factors.reserve(plan.factors.size());
  for (const auto& f : plan.factors) factors.push_back(to_sparse(f.op, options.dense_limit));
  const Permutation reversal = plan.reversal.materialize();

  double worst = 0.0;
  const long long cols = static_cast<long long>(dim);
#pragma omp parallel for schedule(dynamic) reduction(max : worst)
  for (long long jj = 0; jj < cols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    DenseVector v = DenseVector::basis(dim, j);
    for (const auto& f : factors) v = f * v;
    const DenseVector column = permute(reversal, v);
    std::size_t e = 0;
    for (std::size_t r = 0; r < dim; ++r) {
      worst = std::max(worst, std::abs(column[r] - roots[e]));
      e += j;
      if (e >= dim) e -= dim;
    }
  }
  report.residual = worst;

  if (options.check_unitarity) {
    report.factor_unitarity.reserve(plan.factors.size());
    for (const auto& f : plan.factors)
      report.factor_unitarity.push_back(structured_unitarity_residual(f.op));
  }
  return report;
}

}  // namespace qftkron
