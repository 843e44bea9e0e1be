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

#ifndef QFTKRON_KERNELS_HPP
#define QFTKRON_KERNELS_HPP

// Data-parallel inner loops. Every kernel exists twice: an OpenMP version
// used by the library and a plain serial reference that the tests and the
// benchmark compare against. Both produce bitwise-identical results for the
// same inputs since each output element is computed by the same sequence of
// floating point operations.

#include <span>

#include "qftkron/types.hpp"

namespace qftkron::kernels {

/// Shape of a state vector of `n_sites` digits of base `local_dim`, with a
/// single site singled out. Index j decomposes as
///   j = outer * (d * stride) + digit * stride + inner
/// where stride = d^(n_sites - 1 - site).
struct SiteLayout {
  std::size_t local_dim;
  std::size_t stride;
  std::size_t outer;

  static SiteLayout make(std::size_t n_sites, std::size_t local_dim, std::size_t site);
};

namespace serial {

/// out = a (m x k) * b (k x n), all row-major.
void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
            std::size_t m, std::size_t k, std::size_t n);

/// out = a (m x n) * x.
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out,
            std::size_t m, std::size_t n);

/// out = a (p x q) kron b (r x s).
void kron(std::span<const cplx> a, std::size_t p, std::size_t q, std::span<const cplx> b,
          std::size_t r, std::size_t s, std::span<cplx> out);

/// In-place application of a d x d row-major matrix to one site.
void apply_site(std::span<cplx> state, const SiteLayout& layout, std::span<const cplx> mat);

/// In-place application of diag(diag) to one site.
void apply_site_diagonal(std::span<cplx> state, const SiteLayout& layout,
                         std::span<const cplx> diag);

/// y += alpha * x.
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

}  // namespace serial

namespace omp {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
            std::size_t m, std::size_t k, std::size_t n);
void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out,
            std::size_t m, std::size_t n);
void kron(std::span<const cplx> a, std::size_t p, std::size_t q, std::span<const cplx> b,
          std::size_t r, std::size_t s, std::span<cplx> out);
void apply_site(std::span<cplx> state, const SiteLayout& layout, std::span<const cplx> mat);
void apply_site_diagonal(std::span<cplx> state, const SiteLayout& layout,
                         std::span<const cplx> diag);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

}  // namespace omp

}  // namespace qftkron::kernels

#endif  // QFTKRON_KERNELS_HPP
