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

#include "fixtures.hpp"
#include "qftkron/spectral.hpp"

using namespace qftkron;

TEST(Expand, IdentityTerm) {
  const StructuredOperator op(2, 2, {make_term(2, 2, 1.0, {})});
  EXPECT_EQ(expand(op), DenseMatrix::identity(4));
}

TEST(Expand, ProjectorSumIsBlockDiagonal) {
  // E_1 kron I + E_2 kron R_2
  const StructuredOperator op(2, 2,
                              {make_term(2, 2, 1.0, {{0, projector(2, 0)}}),
                               make_term(2, 2, 1.0, {{0, projector(2, 1)}, {1, r_gate(2, 2)}})});
  const DenseMatrix want = oracle::diag({1.0, 1.0, 1.0, cplx(0.0, -1.0)});
  EXPECT_LT(max_abs_diff(expand(op), want), 1e-15);
}

TEST(Expand, OrthogonalProjectorsAnnihilate) {
  std::mt19937_64 rng(31);
  const auto a = oracle::random_matrix(2, 2, rng), b = oracle::random_matrix(2, 2, rng);
  const StructuredOperator left(2, 2, {make_term(2, 2, 1.0, {{0, projector(2, 0)}, {1, a}})});
  const StructuredOperator right(2, 2, {make_term(2, 2, 1.0, {{0, projector(2, 1)}, {1, b}})});
  const StructuredOperator prod = left * right;
  EXPECT_TRUE(prod.terms().empty());
  EXPECT_EQ(expand(prod), DenseMatrix(4, 4));
}

TEST(Expand, MatchesIndexFormula) {
  std::mt19937_64 rng(32);
  for (std::size_t d : {2u, 3u}) {
    const auto op = fixtures::random_operator(3, d, 3, rng);
    EXPECT_LT(max_abs_diff(expand(op), fixtures::dense_of(op)), 1e-12);
  }
}

TEST(Expand, RespectsLimit) {
  EXPECT_THROW(expand(StructuredOperator::identity(13, 2)), DenseLimitExceeded);
  EXPECT_NO_THROW(expand(StructuredOperator::identity(13, 2), 8192));
}

TEST(Structured, RejectsBadShapes) {
  EXPECT_THROW(StructuredOperator(2, 2, {KronTerm{1.0, {DenseMatrix::identity(2)}}}),
               std::invalid_argument);
  EXPECT_THROW(
      StructuredOperator(2, 2, {KronTerm{1.0, {DenseMatrix::identity(2), DenseMatrix::identity(3)}}}),
      std::invalid_argument);
}

TEST(ApplyStructured, IdentityLeavesVector) {
  std::mt19937_64 rng(33);
  const auto x = oracle::random_vector(27, rng);
  EXPECT_EQ(apply_structured(StructuredOperator::identity(3, 3), x), x);
}

TEST(ApplyStructured, MatchesDenseProduct) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 10; ++t) {
    const std::size_t d = 2 + t % 2;
    const auto op = fixtures::random_operator(3, d, 1 + t % 4, rng);
    const auto x = oracle::random_vector(oracle::ipow(d, 3), rng);
    EXPECT_LT(max_abs_diff(apply_structured(op, x), oracle::matvec(fixtures::dense_of(op), x)),
              1e-12);
  }
}

TEST(ApplyStructured, ReferenceAgreesBitwise) {
  std::mt19937_64 rng(35);
  const auto op = fixtures::random_operator(13, 2, 3, rng);
  const auto x = oracle::random_vector(std::size_t{1} << 13, rng);
  EXPECT_EQ(apply_structured(op, x), apply_structured_reference(op, x));
}

TEST(ApplyStructured, HadamardOnFirstFactor) {
  std::mt19937_64 rng(36);
  const DenseMatrix h = oracle::dft(2);
  const auto x1 = oracle::random_vector(2, rng), x2 = oracle::random_vector(2, rng),
             x3 = oracle::random_vector(2, rng);
  const auto op = StructuredOperator::local(3, 2, 0, h);
  const DenseVector got = apply_structured(op, oracle::kron_all({x1, x2, x3}));
  const DenseVector want = oracle::kron_all({oracle::matvec(h, x1), x2, x3});
  EXPECT_LT(max_abs_diff(got, want), 1e-14);
}

TEST(Structured, AdjointExpandsToAdjoint) {
  std::mt19937_64 rng(37);
  const auto op = fixtures::random_operator(3, 2, 2, rng);
  EXPECT_LT(max_abs_diff(expand(op.adjoint()), expand(op).adjoint()), 1e-14);
}

TEST(Structured, ProductExpandsToProduct) {
  std::mt19937_64 rng(38);
  const auto a = fixtures::random_operator(3, 2, 2, rng), b = fixtures::random_operator(3, 2, 3, rng);
  EXPECT_LT(max_abs_diff(expand(a * b), oracle::matmul(expand(a), expand(b))), 1e-11);
}

TEST(Structured, SupportAndRestriction) {
  const auto op = StructuredOperator(
      4, 2, {make_term(4, 2, 1.0, {{1, projector(2, 0)}}),
             make_term(4, 2, 1.0, {{1, projector(2, 1)}, {3, r_gate(2, 2)}})});
  EXPECT_EQ(op.support(), (std::vector<std::size_t>{1, 3}));
  const auto r = op.restricted({1, 3});
  EXPECT_EQ(r.n_sites(), 2u);
  EXPECT_LT(max_abs_diff(expand(r), oracle::diag({1.0, 1.0, 1.0, cplx(0.0, -1.0)})), 1e-15);
  EXPECT_THROW(op.restricted({1}), std::invalid_argument);
}

TEST(ToSparse, MatchesExpand) {
  std::mt19937_64 rng(39);
  for (std::size_t d : {2u, 3u}) {
    const auto op = fixtures::random_operator(4, d, 3, rng);
    const SparseMatrix s = to_sparse(op);
    const DenseMatrix dense = fixtures::dense_of(op);
    DenseMatrix rebuilt(s.rows, s.cols);
    for (std::size_t r = 0; r < s.rows; ++r)
      for (std::size_t k = s.row_start[r]; k < s.row_start[r + 1]; ++k) rebuilt(r, s.col[k]) = s.val[k];
    EXPECT_LT(max_abs_diff(rebuilt, dense), 1e-12);
    const auto x = oracle::random_vector(s.cols, rng);
    EXPECT_LT(max_abs_diff(s * x, oracle::matvec(dense, x)), 1e-12);
  }
}

TEST(ToSparse, CancellationsDropped) {
  // E_1 + E_2 on one site is the identity: one entry per row.
  const StructuredOperator op(3, 2,
                              {make_term(3, 2, 1.0, {{1, projector(2, 0)}}),
                               make_term(3, 2, 1.0, {{1, projector(2, 1)}}),
                               make_term(3, 2, 1.0, {{2, DenseMatrix{{0.0, 1.0}, {1.0, 0.0}}}}),
                               make_term(3, 2, -1.0, {{2, DenseMatrix{{0.0, 1.0}, {1.0, 0.0}}}})});
  const SparseMatrix s = to_sparse(op);
  EXPECT_EQ(s.nnz(), 8u);
  for (std::size_t r = 0; r < 8; ++r) EXPECT_EQ(s.col[s.row_start[r]], r);
}
