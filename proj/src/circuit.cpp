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

#include "qftkron/circuit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace qftkron {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kHadamard: return "hadamard";
    case GateKind::kFourier: return "fourier";
    case GateKind::kPhaseR: return "phase_r";
    case GateKind::kNotX: return "not";
    case GateKind::kControlledR: return "controlled_r";
    case GateKind::kControlledNot: return "cnot";
    case GateKind::kSwap: return "swap";
  }
  return "unknown";
}

namespace {

bool needs_control(GateKind k) {
  return k == GateKind::kControlledR || k == GateKind::kControlledNot || k == GateKind::kSwap;
}

bool needs_level(GateKind k) { return k == GateKind::kPhaseR || k == GateKind::kControlledR; }

}  // namespace

void Circuit::validate() const {
  if (n < 1) throw std::invalid_argument("circuit needs at least one wire");
  if (d < 2) throw std::invalid_argument("circuit needs d >= 2");
  for (const auto& g : gates) {
    if (g.target >= n) throw std::invalid_argument("gate target wire out of range");
    if (needs_control(g.kind) != g.control.has_value())
      throw std::invalid_argument(to_string(g.kind) + " gate has the wrong number of wires");
    if (g.control) {
      if (*g.control >= n) throw std::invalid_argument("gate control wire out of range");
      if (*g.control == g.target) throw std::invalid_argument("control and target wires coincide");
    }
    if (needs_level(g.kind) && g.level < 1)
      throw std::invalid_argument("R gates need a level >= 1");
    if (g.kind == GateKind::kHadamard && d != 2)
      throw std::invalid_argument("Hadamard is only defined for d = 2; use fourier");
  }
}

Circuit lower_to_circuit(const FactorizationPlan& plan, SwapStyle style) {
  if (plan.kind != PlanKind::kQft)
    throw std::invalid_argument("only QFT plans lower to gates; FFT stages are not local");
  if (style == SwapStyle::kThreeCnot && plan.d != 2)
    throw std::invalid_argument("the three-CNOT swap is only available for d = 2");
  Circuit c{plan.n, plan.d, {}};
  for (const auto& f : plan.factors) {
    switch (f.role) {
      case FactorRole::kFourier:
        c.gates.push_back(plan.d == 2 ? Gate::hadamard(f.site) : Gate::fourier(f.site));
        break;
      case FactorRole::kControlledPhase:
        c.gates.push_back(Gate::controlled_r(f.control, f.target, f.level));
        break;
      case FactorRole::kFftStage:
        throw std::invalid_argument("FFT stage inside a QFT plan");
    }
  }
  for (std::size_t i = 0; i < plan.n / 2; ++i) {
    const std::size_t j = plan.n - 1 - i;
    if (style == SwapStyle::kKeepSwap) {
      c.gates.push_back(Gate::swap(i, j));
    } else {
      c.gates.push_back(Gate::cnot(i, j));
      c.gates.push_back(Gate::cnot(j, i));
      c.gates.push_back(Gate::cnot(i, j));
    }
  }
  return c;
}

DenseMatrix gate_local_matrix(const Gate& g, std::size_t d) {
  switch (g.kind) {
    case GateKind::kHadamard:
      if (d != 2) throw std::invalid_argument("Hadamard is only defined for d = 2");
      return dft_matrix(2);
    case GateKind::kFourier:
      return dft_matrix(d);
    case GateKind::kPhaseR:
    case GateKind::kControlledR:
      return r_gate(g.level, d);
    case GateKind::kNotX:
    case GateKind::kControlledNot: {
      DenseMatrix x(d, d);
      for (std::size_t j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
      return x;
    }
    case GateKind::kSwap:
      break;
  }
  throw std::invalid_argument("swap has no single-wire matrix");
}

StructuredOperator gate_unitary(const Gate& g, std::size_t n, std::size_t d) {
  Circuit probe{n, d, {g}};
  probe.validate();
  StructuredOperator op = StructuredOperator::identity(n, d);
  switch (g.kind) {
    case GateKind::kHadamard:
    case GateKind::kFourier:
    case GateKind::kPhaseR:
    case GateKind::kNotX:
      op = StructuredOperator::local(n, d, g.target, gate_local_matrix(g, d));
      break;
    case GateKind::kControlledR:
    case GateKind::kControlledNot: {
      const DenseMatrix u = gate_local_matrix(g, d);
      std::vector<KronTerm> terms;
      DenseMatrix power = DenseMatrix::identity(d);
      for (std::size_t l = 0; l < d; ++l) {
        // R^l is formed from reduced exponents rather than repeated products.
        const DenseMatrix ul =
            g.kind == GateKind::kControlledR ? r_gate_power(g.level, d, l) : power;
        terms.push_back(make_term(n, d, 1.0, {{*g.control, projector(d, l)}, {g.target, ul}}));
        power = u * power;
      }
      op = StructuredOperator(n, d, std::move(terms));
      break;
    }
    case GateKind::kSwap: {
      std::vector<KronTerm> terms;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          DenseMatrix ab(d, d), ba(d, d);
          ab(a, b) = 1.0;
          ba(b, a) = 1.0;
          terms.push_back(make_term(n, d, 1.0, {{g.target, ab}, {*g.control, ba}}));
        }
      op = StructuredOperator(n, d, std::move(terms));
      break;
    }
  }
  return g.adjoint ? op.adjoint() : op;
}

DenseVector simulate_dense(const Circuit& c, const DenseVector& x, std::size_t dense_limit) {
  c.validate();
  const std::size_t dim = dense_dim(c.d, c.n, dense_limit);
  if (x.dim() != dim) throw std::invalid_argument("state dimension is not d^n");
  DenseVector y = x;
  for (const auto& g : c.gates) y = apply_structured(gate_unitary(g, c.n, c.d), y);
  return y;
}

DenseMatrix circuit_unitary(const Circuit& c, std::size_t dense_limit) {
  c.validate();
  const std::size_t dim = dense_dim(c.d, c.n, dense_limit);
  std::vector<StructuredOperator> ops;
  ops.reserve(c.gates.size());
  for (const auto& g : c.gates) ops.push_back(gate_unitary(g, c.n, c.d));
  DenseMatrix u(dim, dim);
  const long long cols = static_cast<long long>(dim);
#pragma omp parallel for schedule(dynamic)
  for (long long jj = 0; jj < cols; ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    DenseVector col = DenseVector::basis(dim, j);
    for (const auto& op : ops) col = apply_structured(op, col);
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = col[i];
  }
  return u;
}

Circuit inverse(const Circuit& c) {
  Circuit out{c.n, c.d, {}};
  out.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    Gate g = *it;
    const bool self_inverse = g.kind == GateKind::kHadamard || g.kind == GateKind::kSwap ||
                              (c.d == 2 && (g.kind == GateKind::kNotX ||
                                            g.kind == GateKind::kControlledNot));
    if (!self_inverse) g.adjoint = !g.adjoint;
    out.gates.push_back(g);
  }
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    switch (g.kind) {
      case GateKind::kHadamard:
      case GateKind::kFourier: ++counts.hadamard_or_fourier; break;
      case GateKind::kPhaseR: ++counts.phase_r; break;
      case GateKind::kNotX: ++counts.not_x; break;
      case GateKind::kControlledR: ++counts.controlled_r; break;
      case GateKind::kControlledNot: ++counts.cnot; break;
      case GateKind::kSwap: ++counts.swap; break;
    }
  }
  return counts;
}

// ---- equivalent variants --------------------------------------------------

namespace {

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t factorial_saturating(std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out = saturating_mul(out, i);
  return out;
}

struct VariantSpace {
  std::vector<std::size_t> flippable;               // gate indices, ascending
  std::vector<std::vector<std::size_t>> runs;       // permutable positions per run
};

VariantSpace variant_space(const Circuit& c, const VariantOptions& options) {
  auto selected = [&](std::size_t idx) {
    if (c.gates[idx].kind != GateKind::kControlledR) return false;
    if (!options.selection) return true;
    const auto& sel = *options.selection;
    return std::find(sel.begin(), sel.end(), idx) != sel.end();
  };
  VariantSpace space;
  const bool flip = options.policy != VariantPolicy::kShuffleCommutingCR;
  const bool shuffle = options.policy != VariantPolicy::kSwapControlTarget;
  if (flip)
    for (std::size_t i = 0; i < c.gates.size(); ++i)
      if (selected(i)) space.flippable.push_back(i);
  if (shuffle) {
    std::size_t i = 0;
    while (i < c.gates.size()) {
      if (c.gates[i].kind != GateKind::kControlledR) {
        ++i;
        continue;
      }
      std::vector<std::size_t> run;
      for (; i < c.gates.size() && c.gates[i].kind == GateKind::kControlledR; ++i)
        if (selected(i)) run.push_back(i);
      if (run.size() > 1) space.runs.push_back(std::move(run));
    }
  }
  return space;
}

Gate flipped(Gate g) {
  std::swap(g.target, *g.control);
  return g;
}

Circuit build_variant(const Circuit& c, const VariantSpace& space, std::uint64_t mask_bits_lo,
                      const std::vector<bool>* mask_bits,
                      const std::vector<std::vector<std::size_t>>& orders) {
  std::vector<Gate> gates = c.gates;
  for (std::size_t b = 0; b < space.flippable.size(); ++b) {
    const bool on = mask_bits ? (*mask_bits)[b] : ((mask_bits_lo >> b) & 1u) != 0;
    if (on) gates[space.flippable[b]] = flipped(gates[space.flippable[b]]);
  }
  std::vector<Gate> out = gates;
  for (std::size_t r = 0; r < space.runs.size(); ++r) {
    const auto& positions = space.runs[r];
    for (std::size_t p = 0; p < positions.size(); ++p)
      out[positions[p]] = gates[positions[orders[r][p]]];
  }
  return {c.n, c.d, std::move(out)};
}

}  // namespace

std::vector<Circuit> equivalent_variants(const Circuit& c, const VariantOptions& options) {
  c.validate();
  const VariantSpace space = variant_space(c, options);

  std::size_t flip_count = 1;
  for (std::size_t b = 0; b < space.flippable.size(); ++b) flip_count = saturating_mul(flip_count, 2);
  std::size_t order_count = 1;
  for (const auto& run : space.runs)
    order_count = saturating_mul(order_count, factorial_saturating(run.size()));
  const std::size_t total = saturating_mul(flip_count, order_count);

  std::vector<std::vector<std::size_t>> orders;
  for (const auto& run : space.runs) {
    std::vector<std::size_t> id(run.size());
    std::iota(id.begin(), id.end(), 0);
    orders.push_back(std::move(id));
  }

  std::vector<Circuit> out;
  if (total <= options.max_variants) {
    out.reserve(total);
    while (true) {
      for (std::size_t mask = 0; mask < flip_count; ++mask)
        out.push_back(build_variant(c, space, mask, nullptr, orders));
      // Advance the run orderings like an odometer, last run fastest.
      std::size_t r = orders.size();
      bool advanced = false;
      while (r-- > 0) {
        if (std::next_permutation(orders[r].begin(), orders[r].end())) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    return out;
  }

  std::mt19937_64 rng(options.seed);
  out.push_back(c);
  std::bernoulli_distribution coin(0.5);
  while (out.size() < options.max_variants) {
    std::vector<bool> bits(space.flippable.size());
    for (std::size_t b = 0; b < bits.size(); ++b) bits[b] = coin(rng);
    for (auto& order : orders) std::shuffle(order.begin(), order.end(), rng);
    out.push_back(build_variant(c, space, 0, &bits, orders));
  }
  return out;
}

}  // namespace qftkron
