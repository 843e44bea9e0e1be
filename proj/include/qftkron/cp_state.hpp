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

#ifndef QFTKRON_CP_STATE_HPP
#define QFTKRON_CP_STATE_HPP

#include <string>
#include <vector>

#include "qftkron/factorizer.hpp"

namespace qftkron {

/// Default relative pruning threshold for apply_op_cp.
inline constexpr double kDefaultPrune = 1e-14;

/// weight * (site_vectors[0] kron ... kron site_vectors[n-1]); every site
/// vector has unit 2-norm and the weight carries the magnitude.
struct RankOneTerm {
  cplx weight{1.0};
  std::vector<DenseVector> site_vectors;
};

/// A state held as a sum of rank-1 terms (a CP representation). The term
/// count is a property of the representation, not the tensor rank.
class CPState {
 public:
  CPState(std::size_t n, std::size_t d, std::vector<RankOneTerm> terms);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  const std::vector<RankOneTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<RankOneTerm> terms_;
};

/// Single term e_(digits[0]) kron ... kron e_(digits[n-1]) with weight 1.
CPState cp_basis_state(const std::vector<std::size_t>& digits, std::size_t d);

/// Single term built from arbitrary nonzero site vectors; norms move into
/// the weight.
CPState cp_product_state(const std::vector<DenseVector>& vectors);

/// Seeded rank-1 state with complex Gaussian site vectors. The first site
/// vector is resampled until every component exceeds 1e-6 in magnitude.
CPState generic_rank_one(std::size_t n, std::size_t d, std::uint64_t seed);

DenseVector cp_to_dense(const CPState& s, std::size_t dense_limit = kDefaultDenseLimit);

/// Applies every Kronecker term of `op` to every rank-1 term of `s`. Output
/// terms are ordered by (state term, operator term). Candidates whose weight
/// magnitude is below prune * (largest candidate weight) are dropped, and
/// with prune > 0 exactly-zero terms always are; prune = 0 keeps everything.
CPState apply_op_cp(const StructuredOperator& op, const CPState& s,
                    double prune = kDefaultPrune);

/// Site reversal on the representation: every term's site list is reversed.
CPState permute_tensor_factors(const CPState& s);

struct CascadeResult {
  CPState state;
  /// Term count after each factor.
  std::vector<std::size_t> trajectory;
  /// How many of those terms carry weight exactly zero.
  std::vector<std::size_t> zero_weight;
};

/// Applies the k factors of diagonal_decomposition(k, d, orientation), in
/// order i = 1..k, to a (k+1)-site state.
CascadeResult diagonal_cascade_cp(std::size_t k, std::size_t d, const CPState& s,
                                  double prune = kDefaultPrune,
                                  Orientation orientation = Orientation::kControlFirst);

/// Numerical rank of the (d^cut x d^(n-cut)) matricization of the dense
/// state: singular values above rel_tol times the largest.
std::size_t bipartition_rank(const CPState& s, std::size_t cut,
                             std::size_t dense_limit = kDefaultDenseLimit,
                             double rel_tol = 1e-10);

struct CompressOptions {
  double tol = 1e-12;
  /// For two-site states, rewrite via SVD when that gives fewer terms.
  bool svd_two_site = true;
};

/// Drops negligible terms and merges terms whose site vectors are parallel
/// at every site. Never increases the term count.
CPState compress(const CPState& s, const CompressOptions& options = {});

struct TrajectoryStep {
  std::size_t step = 0;
  std::string label;
  std::size_t term_count = 0;
  std::size_t zero_weight_terms = 0;
  double elapsed_ms = 0.0;
};

struct RankExperimentReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<TrajectoryStep> steps;
  std::size_t final_term_count = 0;
  /// max |cp_to_dense(output) - F * cp_to_dense(input)|
  double residual = 0.0;
};

/// Runs a QFT plan factor by factor on a CP state, then the digit reversal,
/// and checks the result against the dense DFT. The trajectory lists one
/// step per plan factor; the reversal does not change the term count and is
/// not listed.
RankExperimentReport qft_rank_experiment(std::size_t n, std::size_t d, const CPState& input,
                                         double prune = kDefaultPrune,
                                         Orientation orientation = Orientation::kTargetFirst,
                                         std::size_t dense_limit = kDefaultDenseLimit);

/// Same, over the cascade of one diagonal decomposition.
RankExperimentReport cascade_rank_experiment(std::size_t k, std::size_t d, const CPState& input,
                                             double prune = kDefaultPrune,
                                             Orientation orientation = Orientation::kControlFirst,
                                             std::size_t dense_limit = kDefaultDenseLimit);

/// CSV with header step,factor_label,term_count,elapsed_ms.
std::string trajectory_csv(const RankExperimentReport& report);
std::string trajectory_json(const RankExperimentReport& report, int indent = 2);

}  // namespace qftkron

#endif  // QFTKRON_CP_STATE_HPP
