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

#ifndef QFTKRON_STRUCTURED_HPP
#define QFTKRON_STRUCTURED_HPP

#include <map>
#include <vector>

#include "qftkron/dense.hpp"

namespace qftkron {

/// Rank-1 projector E_level = e_level e_level^T on one site (0-based level).
DenseMatrix projector(std::size_t d, std::size_t level);

/// coefficient * (factors[0] kron ... kron factors[n-1]). factors[0] acts on
/// the most significant digit.
struct KronTerm {
  cplx coefficient{1.0};
  std::vector<DenseMatrix> factors;

  friend bool operator==(const KronTerm&, const KronTerm&) = default;
};

/// Builds a term on `n_sites` sites of dimension d that is the identity
/// everywhere except at the sites named in `local`.
KronTerm make_term(std::size_t n_sites, std::size_t d, cplx coefficient,
                   const std::map<std::size_t, DenseMatrix>& local);

/// A scaled sum of Kronecker products over n sites of a fixed local
/// dimension. Immutable once built.
class StructuredOperator {
 public:
  StructuredOperator(std::size_t n_sites, std::size_t local_dim, std::vector<KronTerm> terms);

  static StructuredOperator identity(std::size_t n_sites, std::size_t local_dim);
  /// `m` on `site`, identity elsewhere.
  static StructuredOperator local(std::size_t n_sites, std::size_t local_dim, std::size_t site,
                                  const DenseMatrix& m);

  std::size_t n_sites() const { return n_sites_; }
  std::size_t local_dim() const { return local_dim_; }
  const std::vector<KronTerm>& terms() const { return terms_; }

  /// d^n; throws std::overflow_error when it does not fit.
  std::uint64_t dim() const { return checked_pow(local_dim_, n_sites_); }

  /// Conjugate coefficients and adjoint factors.
  StructuredOperator adjoint() const;

  /// Sites where at least one term carries a non-identity factor, ascending.
  std::vector<std::size_t> support() const;

  /// Keeps only `sites` (ascending). Every dropped site must be the
  /// identity in every term.
  StructuredOperator restricted(const std::vector<std::size_t>& sites) const;

  /// Operator product (*this) * rhs, term by term. Terms containing a zero
  /// factor are dropped.
  StructuredOperator operator*(const StructuredOperator& rhs) const;

  friend bool operator==(const StructuredOperator&, const StructuredOperator&) = default;

 private:
  std::size_t n_sites_;
  std::size_t local_dim_;
  std::vector<KronTerm> terms_;
};

/// Compressed sparse row matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> row_start;  // rows + 1 offsets into col and val
  std::vector<std::size_t> col;
  std::vector<cplx> val;

  std::size_t nnz() const { return val.size(); }
  DenseVector operator*(const DenseVector& x) const;
};

/// Exact entries of the expansion without forming it densely. Entries that
/// cancel to exactly zero are dropped. Refuses d^n above `dense_limit`.
SparseMatrix to_sparse(const StructuredOperator& op, std::size_t dense_limit = kDefaultDenseLimit);

/// Dense matrix of the operator; refuses d^n above `dense_limit`.
DenseMatrix expand(const StructuredOperator& op, std::size_t dense_limit = kDefaultDenseLimit);

/// expand(op) * x computed site by site without forming the expansion.
DenseVector apply_structured(const StructuredOperator& op, const DenseVector& x);

/// Same contract as apply_structured, driven by the serial reference kernels.
DenseVector apply_structured_reference(const StructuredOperator& op, const DenseVector& x);

}  // namespace qftkron

#endif  // QFTKRON_STRUCTURED_HPP
