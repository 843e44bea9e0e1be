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

#include "qftkron/cp_state.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>

namespace qftkron {

namespace {

constexpr double kUnitNormTolerance = 1e-8;

// Returns the norm and rescales v to unit length; a zero vector becomes e_0.
double normalize_in_place(DenseVector& v) {
  const double nrm = v.norm();
  if (nrm == 0.0) {
    v = DenseVector::basis(v.dim(), 0);
    return 0.0;
  }
  v *= 1.0 / nrm;
  return nrm;
}

}  // namespace

CPState::CPState(std::size_t n, std::size_t d, std::vector<RankOneTerm> terms)
    : n_(n), d_(d), terms_(std::move(terms)) {
  if (n_ < 1) throw std::invalid_argument("CP state needs n >= 1");
  if (d_ < 2) throw std::invalid_argument("CP state needs d >= 2");
  for (const auto& t : terms_) {
    if (t.site_vectors.size() != n_) throw std::invalid_argument("term has wrong site count");
    for (const auto& v : t.site_vectors) {
      if (v.dim() != d_) throw std::invalid_argument("site vector dimension is not d");
      if (std::abs(v.norm() - 1.0) > kUnitNormTolerance)
        throw std::invalid_argument("site vectors must have unit norm");
    }
  }
}

CPState cp_basis_state(const std::vector<std::size_t>& digits, std::size_t d) {
  if (digits.empty()) throw std::invalid_argument("basis state needs at least one digit");
  RankOneTerm t{1.0, {}};
  for (std::size_t digit : digits) {
    if (digit >= d) throw std::out_of_range("digit out of range for local dimension");
    t.site_vectors.push_back(DenseVector::basis(d, digit));
  }
  return {digits.size(), d, {std::move(t)}};
}

CPState cp_product_state(const std::vector<DenseVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("product state needs at least one site");
  RankOneTerm t{1.0, vectors};
  for (auto& v : t.site_vectors) {
    const double nrm = normalize_in_place(v);
    if (nrm == 0.0) throw std::invalid_argument("product state site vector is zero");
    t.weight *= nrm;
  }
  const std::size_t d = vectors.front().dim();
  return {vectors.size(), d, {std::move(t)}};
}

CPState generic_rank_one(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto sample = [&] {
    DenseVector v(d);
    for (std::size_t a = 0; a < d; ++a) v[a] = {gauss(rng), gauss(rng)};
    return v;
  };
  std::vector<DenseVector> vectors;
  vectors.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    DenseVector v = sample();
    normalize_in_place(v);
    if (s == 0) {
      auto smallest = [&] {
        double m = std::abs(v[0]);
        for (std::size_t a = 1; a < d; ++a) m = std::min(m, std::abs(v[a]));
        return m;
      };
      while (smallest() <= 1e-6) {
        v = sample();
        normalize_in_place(v);
      }
    }
    vectors.push_back(std::move(v));
  }
  return cp_product_state(vectors);
}

DenseVector cp_to_dense(const CPState& s, std::size_t dense_limit) {
  const std::size_t dim = dense_dim(s.d(), s.n(), dense_limit);
  const std::size_t n = s.n();
  const std::size_t d = s.d();
  DenseVector out(dim);
  std::vector<std::size_t> digits(n);
  for (const auto& t : s.terms()) {
    if (t.weight == cplx{}) continue;
    std::fill(digits.begin(), digits.end(), 0);
    for (std::size_t j = 0; j < dim; ++j) {
      cplx v = t.weight;
      for (std::size_t site = 0; site < n; ++site) v *= t.site_vectors[site][digits[site]];
      out[j] += v;
      // Increment the big-endian digit counter.
      for (std::size_t site = n; site-- > 0;) {
        if (++digits[site] < d) break;
        digits[site] = 0;
      }
    }
  }
  return out;
}

CPState apply_op_cp(const StructuredOperator& op, const CPState& s, double prune) {
  if (op.n_sites() != s.n() || op.local_dim() != s.d())
    throw std::invalid_argument("operator and state shapes differ");
  if (prune < 0.0) throw std::invalid_argument("prune threshold must be non-negative");
  const auto& op_terms = op.terms();
  const std::size_t n_op = op_terms.size();
  const std::size_t total = s.term_count() * n_op;
  std::vector<RankOneTerm> candidates(total);

  const long long count = static_cast<long long>(total);
#pragma omp parallel for schedule(static) if (total >= 64)
  for (long long pp = 0; pp < count; ++pp) {
    const auto p = static_cast<std::size_t>(pp);
    const RankOneTerm& in = s.terms()[p / n_op];
    const KronTerm& kt = op_terms[p % n_op];
    RankOneTerm out{in.weight * kt.coefficient, {}};
    out.site_vectors.reserve(s.n());
    for (std::size_t site = 0; site < s.n(); ++site) {
      const DenseMatrix& f = kt.factors[site];
      if (f.is_identity()) {
        out.site_vectors.push_back(in.site_vectors[site]);
        continue;
      }
      DenseVector v = f * in.site_vectors[site];
      out.weight *= normalize_in_place(v);
      out.site_vectors.push_back(std::move(v));
    }
    if (out.weight == cplx{})
      for (auto& v : out.site_vectors) v = DenseVector::basis(s.d(), 0);
    candidates[p] = std::move(out);
  }

  double largest = 0.0;
  for (const auto& c : candidates) largest = std::max(largest, std::abs(c.weight));
  std::vector<RankOneTerm> kept;
  kept.reserve(candidates.size());
  for (auto& c : candidates) {
    const double w = std::abs(c.weight);
    if (prune > 0.0 && (w == 0.0 || w < prune * largest)) continue;
    kept.push_back(std::move(c));
  }
  return {s.n(), s.d(), std::move(kept)};
}

CPState permute_tensor_factors(const CPState& s) {
  std::vector<RankOneTerm> terms = s.terms();
  for (auto& t : terms) std::reverse(t.site_vectors.begin(), t.site_vectors.end());
  return {s.n(), s.d(), std::move(terms)};
}

namespace {

std::size_t zero_weight_count(const CPState& s) {
  return static_cast<std::size_t>(std::count_if(s.terms().begin(), s.terms().end(),
                                                [](const RankOneTerm& t) { return t.weight == cplx{}; }));
}

}  // namespace

CascadeResult diagonal_cascade_cp(std::size_t k, std::size_t d, const CPState& s, double prune,
                                  Orientation orientation) {
  if (s.n() != k + 1 || s.d() != d)
    throw std::invalid_argument("cascade needs a (k+1)-site state of local dimension d");
  const DiagonalDecomposition dec = diagonal_decomposition(k, d, orientation);
  CascadeResult result{s, {}, {}};
  for (const auto& factor : dec.factors) {
    result.state = apply_op_cp(factor, result.state, prune);
    result.trajectory.push_back(result.state.term_count());
    result.zero_weight.push_back(zero_weight_count(result.state));
  }
  return result;
}

namespace {

Eigen::MatrixXcd matricize(const DenseVector& dense, std::size_t rows, std::size_t cols) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = dense[r * cols + c];
  return m;
}

}  // namespace

std::size_t bipartition_rank(const CPState& s, std::size_t cut, std::size_t dense_limit,
                             double rel_tol) {
  if (cut < 1 || cut >= s.n()) throw std::out_of_range("cut must lie strictly inside the sites");
  const DenseVector dense = cp_to_dense(s, dense_limit);
  const auto rows = static_cast<std::size_t>(checked_pow(s.d(), cut));
  const std::size_t cols = dense.dim() / rows;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matricize(dense, rows, cols));
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

CPState compress(const CPState& s, const CompressOptions& options) {
  const double tol = options.tol;
  auto drop_small = [&](std::vector<RankOneTerm>& terms) {
    double largest = 0.0;
    for (const auto& t : terms) largest = std::max(largest, std::abs(t.weight));
    std::erase_if(terms, [&](const RankOneTerm& t) {
      return std::abs(t.weight) == 0.0 || std::abs(t.weight) <= tol * largest;
    });
  };

  std::vector<RankOneTerm> terms = s.terms();
  drop_small(terms);

  // Merge terms that are parallel at every site: x_j = c_s x_i with
  // c_s = <x_i, x_j> for unit vectors.
  std::vector<bool> merged(terms.size(), false);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (merged[i]) continue;
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (merged[j]) continue;
      cplx phase = 1.0;
      bool parallel = true;
      for (std::size_t site = 0; site < s.n() && parallel; ++site) {
        const DenseVector& xi = terms[i].site_vectors[site];
        const DenseVector& xj = terms[j].site_vectors[site];
        const cplx overlap = inner(xi, xj);
        parallel = (xj - overlap * xi).norm() <= tol;
        phase *= overlap;
      }
      if (!parallel) continue;
      terms[i].weight += terms[j].weight * phase;
      merged[j] = true;
    }
  }
  std::vector<RankOneTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!merged[i]) out.push_back(std::move(terms[i]));
  drop_small(out);

  if (options.svd_two_site && s.n() == 2 && out.size() > 1) {
    const CPState current(s.n(), s.d(), out);
    const DenseVector dense = cp_to_dense(current);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matricize(dense, s.d(), s.d()),
                                           Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(0) > 0.0 && sv(i) > tol * sv(0)) ++rank;
    if (rank < out.size()) {
      // M = U S V^H, so M_ab = sum_r s_r U_ar conj(V_br).
      std::vector<RankOneTerm> svd_terms;
      for (std::size_t r = 0; r < rank; ++r) {
        RankOneTerm t{sv(static_cast<Eigen::Index>(r)), {DenseVector(s.d()), DenseVector(s.d())}};
        for (std::size_t a = 0; a < s.d(); ++a) {
          const auto ri = static_cast<Eigen::Index>(r);
          const auto ai = static_cast<Eigen::Index>(a);
          t.site_vectors[0][a] = svd.matrixU()(ai, ri);
          t.site_vectors[1][a] = std::conj(svd.matrixV()(ai, ri));
        }
        svd_terms.push_back(std::move(t));
      }
      out = std::move(svd_terms);
    }
  }
  return {s.n(), s.d(), std::move(out)};
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

RankExperimentReport qft_rank_experiment(std::size_t n, std::size_t d, const CPState& input,
                                         double prune, Orientation orientation,
                                         std::size_t dense_limit) {
  if (input.n() != n || input.d() != d)
    throw std::invalid_argument("input state does not have n sites of dimension d");
  const std::size_t dim = dense_dim(d, n, dense_limit);
  const FactorizationPlan plan = qft_plan(n, d, orientation);
  RankExperimentReport report{n, d, {}, 0, 0.0};
  CPState state = input;
  for (std::size_t i = 0; i < plan.factors.size(); ++i) {
    const auto start = Clock::now();
    state = apply_op_cp(plan.factors[i].op, state, prune);
    report.steps.push_back({i, plan.factors[i].label(), state.term_count(),
                            zero_weight_count(state), elapsed_ms(start)});
  }
  state = permute_tensor_factors(state);
  report.final_term_count = state.term_count();
  const DenseVector expected = dft_matrix(dim, Direction::kForward, dense_limit) *
                               cp_to_dense(input, dense_limit);
  report.residual = max_abs_diff(cp_to_dense(state, dense_limit), expected);
  return report;
}

RankExperimentReport cascade_rank_experiment(std::size_t k, std::size_t d, const CPState& input,
                                             double prune, Orientation orientation,
                                             std::size_t dense_limit) {
  if (input.n() != k + 1 || input.d() != d)
    throw std::invalid_argument("input state does not have k+1 sites of dimension d");
  const DiagonalDecomposition dec = diagonal_decomposition(k, d, orientation);
  RankExperimentReport report{k + 1, d, {}, 0, 0.0};
  CPState state = input;
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    const auto start = Clock::now();
    state = apply_op_cp(dec.factors[i], state, prune);
    const std::string label = orientation == Orientation::kControlFirst
                                  ? "CR" + std::to_string(i + 2) + "(q1->q" + std::to_string(i + 2) + ")"
                                  : "CR" + std::to_string(i + 2) + "(q" + std::to_string(i + 2) + "->q1)";
    report.steps.push_back({i, label, state.term_count(), zero_weight_count(state),
                            elapsed_ms(start)});
  }
  report.final_term_count = state.term_count();
  const auto diag = diagonal_block_entries(k, d, dense_limit);
  DenseVector expected = cp_to_dense(input, dense_limit);
  for (std::size_t j = 0; j < expected.dim(); ++j) expected[j] *= diag[j];
  report.residual = max_abs_diff(cp_to_dense(state, dense_limit), expected);
  return report;
}

}  // namespace qftkron
