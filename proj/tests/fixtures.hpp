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

#ifndef QFTKRON_TESTS_FIXTURES_HPP
#define QFTKRON_TESTS_FIXTURES_HPP

// Random library objects for property tests, plus dense references built
// from the oracle helpers.

#include "oracle.hpp"
#include "qftkron/cp_state.hpp"
#include "qftkron/structured.hpp"

namespace fixtures {

using namespace qftkron;

/// `terms` Kronecker terms; each site is random with probability 1/2 and
/// the identity otherwise.
inline StructuredOperator random_operator(std::size_t n, std::size_t d, std::size_t terms,
                                          std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::normal_distribution<double> g;
  std::vector<KronTerm> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::map<std::size_t, DenseMatrix> local;
    for (std::size_t s = 0; s < n; ++s)
      if (coin(rng)) local.emplace(s, oracle::random_matrix(d, d, rng));
    out.push_back(make_term(n, d, cplx{g(rng), g(rng)}, local));
  }
  return {n, d, std::move(out)};
}

/// sum_t c_t (A_t1 kron ... kron A_tn) by the index formula.
inline DenseMatrix dense_of(const StructuredOperator& op) {
  const std::size_t dim = oracle::ipow(op.local_dim(), op.n_sites());
  DenseMatrix acc(dim, dim);
  for (const auto& t : op.terms()) acc += t.coefficient * oracle::kron_all(t.factors);
  return acc;
}

inline DenseVector dense_of(const CPState& s) {
  const std::size_t dim = oracle::ipow(s.d(), s.n());
  DenseVector acc(dim);
  for (const auto& t : s.terms()) acc += t.weight * oracle::kron_all(t.site_vectors);
  return acc;
}

/// `terms` rank-1 terms with random site vectors.
inline CPState random_cp(std::size_t n, std::size_t d, std::size_t terms, std::mt19937_64& rng) {
  std::vector<RankOneTerm> out;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<DenseVector> vs;
    for (std::size_t s = 0; s < n; ++s) vs.push_back(oracle::random_vector(d, rng));
    auto one = cp_product_state(vs);
    out.push_back(one.terms().front());
  }
  return {n, d, std::move(out)};
}

}  // namespace fixtures

#endif  // QFTKRON_TESTS_FIXTURES_HPP
