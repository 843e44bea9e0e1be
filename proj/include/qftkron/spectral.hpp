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

#ifndef QFTKRON_SPECTRAL_HPP
#define QFTKRON_SPECTRAL_HPP

#include <string>
#include <vector>

#include "qftkron/dense.hpp"

namespace qftkron {

enum class Direction { kForward, kInverse };

/// omega_N^k = exp(-2 pi i k / N). The exponent is reduced mod N before
/// evaluation; quarter turns are returned exactly.
cplx omega(std::uint64_t modulus, std::int64_t k);

/// omega_{d^level}^k, also valid when d^level overflows 64 bits.
cplx omega_power_of(std::size_t d, std::size_t level, std::int64_t k);

/// omega_N^k as a value object.
struct RootSpec {
  std::uint64_t modulus;
  std::int64_t exponent;

  cplx value() const { return omega(modulus, exponent); }
};

/// The single-site phase gate R_level on a d-level site.
struct PhaseGateSpec {
  std::size_t level;
  std::size_t local_dim;

  DenseMatrix matrix() const;
};

/// Entry (row, col) of the unitary DFT matrix: omega_N^(row*col) / sqrt(N),
/// conjugated for the inverse direction.
cplx dft_entry(std::size_t n, std::size_t row, std::size_t col,
               Direction dir = Direction::kForward);

DenseMatrix dft_matrix(std::size_t n, Direction dir = Direction::kForward,
                       std::size_t dense_limit = kDefaultDenseLimit);

/// Diagonal of the power-th power of Omega_n: entries omega_{d^(n+1)}^(j * power)
/// for j < d^n.
std::vector<cplx> omega_diag_entries(std::size_t n, std::size_t d, std::size_t power,
                                     std::size_t dense_limit = kDefaultDenseLimit);

DenseMatrix omega_diag(std::size_t n, std::size_t d, std::size_t power,
                       std::size_t dense_limit = kDefaultDenseLimit);

/// R_level = diag(omega_{d^level}^0, ..., omega_{d^level}^(d-1)).
DenseMatrix r_gate(std::size_t level, std::size_t d);

/// R_level^power, evaluated entrywise from reduced exponents.
DenseMatrix r_gate_power(std::size_t level, std::size_t d, std::size_t power);

/// [R_2, R_3, ..., R_(n+1)]; their Kronecker product is omega_diag(n, d, 1).
std::vector<DenseMatrix> omega_kron_factors(std::size_t n, std::size_t d);

/// Grid of omega_N exponents row*col, optionally reduced mod N. N <= 64.
std::vector<std::vector<std::uint64_t>> exponent_matrix(std::size_t n, bool reduce);
std::string exponent_matrix_render(std::size_t n, bool reduce);

}  // namespace qftkron

#endif  // QFTKRON_SPECTRAL_HPP
