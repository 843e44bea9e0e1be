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

#ifndef QFTKRON_TYPES_HPP
#define QFTKRON_TYPES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qftkron {

using cplx = std::complex<double>;

/// Largest d^n that any dense materialization (expand, dft_matrix, oracle
/// checks) will accept unless the caller raises it.
inline constexpr std::size_t kDefaultDenseLimit = 4096;

/// Absolute entrywise tolerance used by comparisons that take a tolerance
/// argument and were not given one.
inline constexpr double kDefaultTolerance = 1e-12;

/// Thrown when a request would materialize a dense object above the
/// configured dimension limit.
class DenseLimitExceeded : public std::runtime_error {
 public:
  DenseLimitExceeded(std::size_t requested, std::size_t limit)
      : std::runtime_error("dense dimension " + std::to_string(requested) +
                           " exceeds limit " + std::to_string(limit)),
        requested_(requested),
        limit_(limit) {}

  std::size_t requested() const { return requested_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// d^n, or throws std::overflow_error when it does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t d, std::size_t n);

/// d^n checked against `limit`; throws DenseLimitExceeded above it.
std::size_t dense_dim(std::size_t d, std::size_t n, std::size_t limit);

}  // namespace qftkron

#endif  // QFTKRON_TYPES_HPP
