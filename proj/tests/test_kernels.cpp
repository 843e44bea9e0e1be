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
#include "qftkron/kernels.hpp"

using namespace qftkron;
namespace k = qftkron::kernels;

namespace {

std::vector<cplx> entries(const DenseVector& v) { return v.entries(); }

std::vector<cplx> entries(const DenseMatrix& m) {
  return {m.span().begin(), m.span().end()};
}

}  // namespace

TEST(Kernels, MatmulParallelMatchesSerial) {
  std::mt19937_64 rng(21);
  for (std::size_t m : {1u, 3u, 17u, 64u, 130u}) {
    const auto a = oracle::random_matrix(m, m + 1, rng), b = oracle::random_matrix(m + 1, m, rng);
    std::vector<cplx> s(m * m), p(m * m);
    k::serial::matmul(a.span(), b.span(), s, m, m + 1, m);
    k::omp::matmul(a.span(), b.span(), p, m, m + 1, m);
    EXPECT_EQ(s, p) << "m=" << m;
    EXPECT_LT(oracle::max_diff(DenseMatrix(m, m, s), oracle::matmul(a, b)), 1e-11);
  }
}

TEST(Kernels, MatvecParallelMatchesSerial) {
  std::mt19937_64 rng(22);
  for (std::size_t m : {1u, 9u, 200u}) {
    const auto a = oracle::random_matrix(m, m, rng);
    const auto x = oracle::random_vector(m, rng);
    std::vector<cplx> s(m), p(m);
    k::serial::matvec(a.span(), x.span(), s, m, m);
    k::omp::matvec(a.span(), x.span(), p, m, m);
    EXPECT_EQ(s, p);
    EXPECT_LT(oracle::max_diff(DenseVector(s), oracle::matvec(a, x)), 1e-11);
  }
}

TEST(Kernels, KronParallelMatchesSerial) {
  std::mt19937_64 rng(23);
  const auto a = oracle::random_matrix(5, 3, rng), b = oracle::random_matrix(4, 7, rng);
  std::vector<cplx> s(20 * 21), p(20 * 21);
  k::serial::kron(a.span(), 5, 3, b.span(), 4, 7, s);
  k::omp::kron(a.span(), 5, 3, b.span(), 4, 7, p);
  EXPECT_EQ(s, p);
  EXPECT_EQ(DenseMatrix(20, 21, s), oracle::kron(a, b));
}

TEST(Kernels, ApplySiteMatchesKronEmbedding) {
  std::mt19937_64 rng(24);
  for (std::size_t d : {2u, 3u}) {
    const std::size_t n = d == 2 ? 13 : 8;  // large enough to cross the parallel threshold
    const std::size_t dim = oracle::ipow(d, n);
    for (std::size_t site : {std::size_t{0}, n / 2, n - 1}) {
      const auto mat = oracle::random_matrix(d, d, rng);
      const auto x = oracle::random_vector(dim, rng);
      auto s = entries(x), p = entries(x);
      const auto layout = k::SiteLayout::make(n, d, site);
      k::serial::apply_site(s, layout, mat.span());
      k::omp::apply_site(p, layout, mat.span());
      EXPECT_EQ(s, p);
      // I kron M kron I applied directly by index arithmetic.
      const std::size_t stride = oracle::ipow(d, n - 1 - site);
      DenseVector want(dim);
      for (std::size_t j = 0; j < dim; ++j) {
        const std::size_t digit = (j / stride) % d;
        const std::size_t base = j - digit * stride;
        for (std::size_t c = 0; c < d; ++c) want[j] += mat(digit, c) * x[base + c * stride];
      }
      EXPECT_LT(oracle::max_diff(DenseVector(s), want), 1e-12);
    }
  }
}

TEST(Kernels, ApplySiteDiagonal) {
  std::mt19937_64 rng(25);
  const std::size_t n = 14, d = 2, dim = std::size_t{1} << n;
  const auto x = oracle::random_vector(dim, rng);
  const std::vector<cplx> diag{{0.5, 0.5}, {-1.0, 2.0}};
  auto s = entries(x), p = entries(x);
  const auto layout = k::SiteLayout::make(n, d, 3);
  k::serial::apply_site_diagonal(s, layout, diag);
  k::omp::apply_site_diagonal(p, layout, diag);
  EXPECT_EQ(s, p);
  const std::size_t stride = std::size_t{1} << (n - 4);
  for (std::size_t j = 0; j < dim; j += 977)
    EXPECT_LT(std::abs(s[j] - diag[(j / stride) % 2] * x[j]), 1e-14);
}

TEST(Kernels, Axpy) {
  std::mt19937_64 rng(26);
  const auto x = oracle::random_vector(10000, rng), y = oracle::random_vector(10000, rng);
  auto s = entries(y), p = entries(y);
  const cplx alpha{0.25, -3.0};
  k::serial::axpy(alpha, x.span(), s);
  k::omp::axpy(alpha, x.span(), p);
  EXPECT_EQ(s, p);
  EXPECT_LT(std::abs(s[17] - (y[17] + alpha * x[17])), 1e-14);
}

TEST(Kernels, SiteLayoutShape) {
  const auto l = k::SiteLayout::make(4, 3, 1);
  EXPECT_EQ(l.local_dim, 3u);
  EXPECT_EQ(l.stride, 9u);
  EXPECT_EQ(l.outer, 3u);
}
