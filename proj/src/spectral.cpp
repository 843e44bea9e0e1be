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

#include "qftkron/spectral.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace qftkron {

cplx omega(std::uint64_t modulus, std::int64_t k) {
  if (modulus == 0) throw std::invalid_argument("omega needs a positive modulus");
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = k % m;
  if (r < 0) r += m;
  const auto ur = static_cast<std::uint64_t>(r);
  if (ur == 0) return {1.0, 0.0};
  if (2 * ur == modulus) return {-1.0, 0.0};
  if (4 * ur == modulus) return {0.0, -1.0};
  if (4 * ur == 3 * modulus) return {0.0, 1.0};
  // Symmetric representative keeps the angle in (-pi, pi].
  const long double frac = 2 * ur > modulus
                               ? static_cast<long double>(static_cast<std::int64_t>(ur) - m) /
                                     static_cast<long double>(modulus)
                               : static_cast<long double>(ur) / static_cast<long double>(modulus);
  const long double angle = -2.0L * std::numbers::pi_v<long double> * frac;
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

cplx omega_power_of(std::size_t d, std::size_t level, std::int64_t k) {
  try {
    return omega(checked_pow(d, level), k);
  } catch (const std::overflow_error&) {
    const long double angle = -2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>(k) /
                              std::pow(static_cast<long double>(d), static_cast<long double>(level));
    return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
  }
}

DenseMatrix PhaseGateSpec::matrix() const { return r_gate(level, local_dim); }

cplx dft_entry(std::size_t n, std::size_t row, std::size_t col, Direction dir) {
  const std::uint64_t exponent =
      (static_cast<std::uint64_t>(row % n) * static_cast<std::uint64_t>(col % n)) % n;
  cplx w = omega(n, static_cast<std::int64_t>(exponent));
  if (dir == Direction::kInverse) w = std::conj(w);
  return w / std::sqrt(static_cast<double>(n));
}

DenseMatrix dft_matrix(std::size_t n, Direction dir, std::size_t dense_limit) {
  if (n == 0) throw std::invalid_argument("dft_matrix needs N >= 1");
  if (n > dense_limit) throw DenseLimitExceeded(n, dense_limit);
  // Table of all N roots, then index by (row*col) mod N.
  std::vector<cplx> roots(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t m = 0; m < n; ++m) {
    cplx w = omega(n, static_cast<std::int64_t>(m));
    if (dir == Direction::kInverse) w = std::conj(w);
    roots[m] = w * scale;
  }
  DenseMatrix f(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t e = 0;
    for (std::size_t c = 0; c < n; ++c) {
      f(r, c) = roots[e];
      e += r;
      if (e >= n) e -= n;
    }
  }
  return f;
}

std::vector<cplx> omega_diag_entries(std::size_t n, std::size_t d, std::size_t power,
                                     std::size_t dense_limit) {
  const std::size_t dim = dense_dim(d, n, dense_limit);
  const std::uint64_t modulus = static_cast<std::uint64_t>(dim) * d;
  std::vector<cplx> diag(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::uint64_t e = (static_cast<std::uint64_t>(j) * power) % modulus;
    diag[j] = omega(modulus, static_cast<std::int64_t>(e));
  }
  return diag;
}

DenseMatrix omega_diag(std::size_t n, std::size_t d, std::size_t power, std::size_t dense_limit) {
  return DenseMatrix::diagonal(omega_diag_entries(n, d, power, dense_limit));
}

DenseMatrix r_gate(std::size_t level, std::size_t d) { return r_gate_power(level, d, 1); }

DenseMatrix r_gate_power(std::size_t level, std::size_t d, std::size_t power) {
  if (level < 1) throw std::invalid_argument("R gate level must be >= 1");
  if (d < 2) throw std::invalid_argument("local dimension must be >= 2");
  DenseMatrix r(d, d);
  std::uint64_t modulus = 0;
  try {
    modulus = checked_pow(d, level);
  } catch (const std::overflow_error&) {
    for (std::size_t m = 0; m < d; ++m)
      r(m, m) = omega_power_of(d, level, static_cast<std::int64_t>(m * power));
    return r;
  }
  for (std::size_t m = 0; m < d; ++m) {
    const std::uint64_t e = (static_cast<std::uint64_t>(m) * (power % modulus)) % modulus;
    r(m, m) = omega(modulus, static_cast<std::int64_t>(e));
  }
  return r;
}

std::vector<DenseMatrix> omega_kron_factors(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("omega_kron_factors needs n >= 1");
  std::vector<DenseMatrix> factors;
  factors.reserve(n);
  for (std::size_t level = 2; level <= n + 1; ++level) factors.push_back(r_gate(level, d));
  return factors;
}

std::vector<std::vector<std::uint64_t>> exponent_matrix(std::size_t n, bool reduce) {
  if (n == 0 || n > 64) throw std::invalid_argument("exponent matrix supports 1 <= N <= 64");
  std::vector<std::vector<std::uint64_t>> grid(n, std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) grid[r][c] = reduce ? (r * c) % n : r * c;
  return grid;
}

std::string exponent_matrix_render(std::size_t n, bool reduce) {
  const auto grid = exponent_matrix(n, reduce);
  std::size_t width = 1;
  for (const auto& row : grid)
    for (auto v : row) width = std::max(width, std::to_string(v).size());
  std::ostringstream out;
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string s = std::to_string(row[c]);
      if (c > 0) out << ' ';
      out << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qftkron
