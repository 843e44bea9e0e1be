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

#include "qftkron/kernels.hpp"

#include <cassert>
#include <vector>

namespace qftkron::kernels {

SiteLayout SiteLayout::make(std::size_t n_sites, std::size_t local_dim, std::size_t site) {
  assert(site < n_sites);
  std::size_t stride = 1;
  for (std::size_t s = site + 1; s < n_sites; ++s) stride *= local_dim;
  std::size_t outer = 1;
  for (std::size_t s = 0; s < site; ++s) outer *= local_dim;
  return {local_dim, stride, outer};
}

namespace serial {

void matmul(std::span<const cplx> a, std::span<const cplx> b, std::span<cplx> out,
            std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
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
  for (std::size_t i = 0; i < m; ++i) {
    cplx acc = 0.0;
    const cplx* row = a.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
}

void kron(std::span<const cplx> a, std::size_t p, std::size_t q, std::span<const cplx> b,
          std::size_t r, std::size_t s, std::span<cplx> out) {
  const std::size_t cols = q * s;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      cplx* row = out.data() + (i * r + k) * cols;
      for (std::size_t j = 0; j < q; ++j) {
        const cplx aij = a[i * q + j];
        for (std::size_t l = 0; l < s; ++l) row[j * s + l] = aij * b[k * s + l];
      }
    }
}

void apply_site(std::span<cplx> state, const SiteLayout& layout, std::span<const cplx> mat) {
  const std::size_t d = layout.local_dim;
  const std::size_t block = d * layout.stride;
  std::vector<cplx> in(d);
  for (std::size_t o = 0; o < layout.outer; ++o)
    for (std::size_t inner = 0; inner < layout.stride; ++inner) {
      cplx* base = state.data() + o * block + inner;
      for (std::size_t a = 0; a < d; ++a) in[a] = base[a * layout.stride];
      for (std::size_t a = 0; a < d; ++a) {
        cplx acc = 0.0;
        for (std::size_t b = 0; b < d; ++b) acc += mat[a * d + b] * in[b];
        base[a * layout.stride] = acc;
      }
    }
}

void apply_site_diagonal(std::span<cplx> state, const SiteLayout& layout,
                         std::span<const cplx> diag) {
  const std::size_t d = layout.local_dim;
  const std::size_t block = d * layout.stride;
  for (std::size_t o = 0; o < layout.outer; ++o)
    for (std::size_t a = 0; a < d; ++a) {
      const cplx f = diag[a];
      cplx* base = state.data() + o * block + a * layout.stride;
      for (std::size_t inner = 0; inner < layout.stride; ++inner) base[inner] *= f;
    }
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace serial
}  // namespace qftkron::kernels
