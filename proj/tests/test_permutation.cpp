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
#include "qftkron/permutation.hpp"

using namespace qftkron;

TEST(DigitReversal, EightPointRowOrder) {
  EXPECT_EQ(digit_reversal(3, 2).image(), (std::vector<std::size_t>{0, 4, 2, 6, 1, 5, 3, 7}));
}

TEST(DigitReversal, SingleIndex) { EXPECT_EQ(digit_reversal(3, 2)(3), 6u); }

TEST(DigitReversal, MatchesDigitPeeling) {
  for (std::size_t d : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto p = digit_reversal(n, d);
      for (std::size_t j = 0; j < p.size(); ++j)
        ASSERT_EQ(p(j), oracle::reverse_digits(j, n, d)) << "d=" << d << " n=" << n;
    }
}

TEST(DigitReversal, Involution) {
  for (std::size_t d : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 6; ++n) {
      if (oracle::ipow(d, n) > 20000) continue;
      EXPECT_TRUE(digit_reversal(n, d).is_involution()) << "d=" << d << " n=" << n;
    }
}

TEST(SiteReversal, Symbolic) {
  const SiteReversal r{32, 2};
  EXPECT_FALSE(r.is_identity());
  EXPECT_EQ(r.swap_count(), 16u);
  EXPECT_TRUE((SiteReversal{1, 7}.is_identity()));
  EXPECT_EQ((SiteReversal{3, 2}.materialize()), digit_reversal(3, 2));
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 3}), std::invalid_argument);
}

TEST(Permutation, ComposeInverseMatrix) {
  const Permutation p({2, 0, 3, 1});
  EXPECT_TRUE(p.compose(p.inverse()).is_identity());
  const DenseMatrix m = p.matrix();
  for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m(p(j), j), cplx(1.0));
  std::mt19937_64 rng(41);
  const auto x = oracle::random_vector(4, rng);
  EXPECT_EQ(permute(p, x), oracle::matvec(m, x));
}

TEST(Digits, RoundTrip) {
  EXPECT_EQ(to_digits(11, 3, 3), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(from_digits({1, 0, 2}, 3), 11u);
}

TEST(PermuteTensorFactors, SingleSiteUnchanged) {
  std::mt19937_64 rng(42);
  const auto x = oracle::random_vector(5, rng);
  EXPECT_EQ(permute_tensor_factors(x, 1, 5), x);
}

TEST(PermuteTensorFactors, ReversesRankOneFactors) {
  std::mt19937_64 rng(43);
  const auto v1 = oracle::random_vector(3, rng), v2 = oracle::random_vector(3, rng),
             v3 = oracle::random_vector(3, rng);
  const auto got = permute_tensor_factors(oracle::kron_all({v1, v2, v3}), 3, 3);
  EXPECT_LT(max_abs_diff(got, oracle::kron_all({v3, v2, v1})), 1e-14);
}

TEST(PermuteTensorFactors, EntryMovesToReversedIndex) {
  std::mt19937_64 rng(44);
  const auto x = oracle::random_vector(32, rng);
  const auto y = permute_tensor_factors(x, 5, 2);
  for (std::size_t j = 0; j < 32; ++j) EXPECT_EQ(y[oracle::reverse_digits(j, 5, 2)], x[j]);
}

TEST(PermuteTensorFactors, CPStateAgreesWithDense) {
  std::mt19937_64 rng(45);
  const auto s = fixtures::random_cp(3, 2, 2, rng);
  EXPECT_LT(max_abs_diff(cp_to_dense(permute_tensor_factors(s)),
                         permute_tensor_factors(fixtures::dense_of(s), 3, 2)),
            1e-14);
  const auto one = fixtures::random_cp(1, 3, 2, rng);
  EXPECT_EQ(cp_to_dense(permute_tensor_factors(one)), cp_to_dense(one));
}
