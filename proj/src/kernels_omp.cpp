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

#include <vector>

#include "qftkron/kernels.hpp"

// Below this many scalar updates a parallel region costs more than it saves.
#define QFTKRON_OMP_MIN_WORK 8192

namespace qftkron::kernels::omp {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
            std::size_t m, std::size_t k, std::size_t n) {
  const long long rows = static_cast<long long>(m);
#pragma omp parallel for schedule(static) if (m * k * n >= QFTKRON_OMP_MIN_WORK)
  for (long long ii = 0; ii < rows; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    cplx* row = out.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      const cplx* brow = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aip * brow[j];
    }
  }
}

void matvec(std::span<const cplx> a, std::span<const cplx> x, std::span<cplx> out,
            std::size_t m, std::size_t n) {
  const long long rows = static_cast<long long>(m);
#pragma omp parallel for schedule(static) if (m * n >= QFTKRON_OMP_MIN_WORK)
  for (long long ii = 0; ii < rows; ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    cplx acc = 0.0;
    const cplx* row = a.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
}

void kron(std::span<const cplx> a, std::size_t p, std::size_t q, std::span<const cplx> b,
          std::size_t r, std::size_t s, std::span<cplx> out) {
  const std::size_t cols = q * s;
  const long long out_rows = static_cast<long long>(p * r);
#pragma omp parallel for schedule(static) if (p * q * r * s >= QFTKRON_OMP_MIN_WORK)
  for (long long row_index = 0; row_index < out_rows; ++row_index) {
    const std::size_t i = static_cast<std::size_t>(row_index) / r;
    const std::size_t k = static_cast<std::size_t>(row_index) % r;
    cplx* row = out.data() + static_cast<std::size_t>(row_index) * cols;
    for (std::size_t j = 0; j < q; ++j) {
      const cplx aij = a[i * q + j];
      for (std::size_t l = 0; l < s; ++l) row[j * s + l] = aij * b[k * s + l];
    }
  }
}

void apply_site(std::span<cplx> state, const SiteLayout& layout, std::span<const cplx> mat) {
  const std::size_t d = layout.local_dim;
  const std::size_t block = d * layout.stride;
  const long long groups = static_cast<long long>(layout.outer * layout.stride);
#pragma omp parallel if (state.size() * d >= QFTKRON_OMP_MIN_WORK)
  {
    std::vector<cplx> in(d);
#pragma omp for schedule(static)
    for (long long g = 0; g < groups; ++g) {
      const std::size_t o = static_cast<std::size_t>(g) / layout.stride;
      const std::size_t inner = static_cast<std::size_t>(g) % layout.stride;
      cplx* base = state.data() + o * block + inner;
      for (std::size_t a = 0; a < d; ++a) in[a] = base[a * layout.stride];
      for (std::size_t a = 0; a < d; ++a) {
        cplx acc = 0.0;
        for (std::size_t b = 0; b < d; ++b) acc += mat[a * d + b] * in[b];
        base[a * layout.stride] = acc;
      }
    }
  }
}

void apply_site_diagonal(std::span<cplx> state, const SiteLayout& layout,
                         std::span<const cplx> diag) {
  const std::size_t d = layout.local_dim;
  const std::size_t size = state.size();
  const long long total = static_cast<long long>(size);
#pragma omp parallel for schedule(static) if (size >= QFTKRON_OMP_MIN_WORK)
  for (long long jj = 0; jj < total; ++jj) {
    const std::size_t j = static_cast<std::size_t>(jj);
    state[j] *= diag[(j / layout.stride) % d];
  }
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  const long long size = static_cast<long long>(x.size());
#pragma omp parallel for schedule(static) if (x.size() >= QFTKRON_OMP_MIN_WORK)
  for (long long i = 0; i < size; ++i) y[i] += alpha * x[i];
}

}  // namespace qftkron::kernels::omp
