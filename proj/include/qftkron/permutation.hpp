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

#ifndef QFTKRON_PERMUTATION_HPP
#define QFTKRON_PERMUTATION_HPP

#include <vector>

#include "qftkron/dense.hpp"

namespace qftkron {

/// A bijection on {0, ..., size-1}. As a matrix it maps e_j to e_image[j].
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t size);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t j) const { return image_[j]; }
  const std::vector<std::size_t>& image() const { return image_; }

  /// (*this o other)(j) = (*this)(other(j)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_involution() const { return compose(*this).is_identity(); }

  DenseMatrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// Base-d digits of j, most significant first, padded to n digits.
std::vector<std::size_t> to_digits(std::size_t j, std::size_t n, std::size_t d);
std::size_t from_digits(const std::vector<std::size_t>& digits, std::size_t d);

/// Reverses the n base-d digits of every index.
Permutation digit_reversal(std::size_t n, std::size_t d);

/// The base-d digit reversal on n sites, kept symbolic so that plans for
/// large n never allocate d^n indices.
struct SiteReversal {
  std::size_t n;
  std::size_t d;

  bool is_identity() const { return n <= 1; }
  Permutation materialize() const { return digit_reversal(n, d); }
  /// Number of pairwise site swaps that realize it.
  std::size_t swap_count() const { return n / 2; }

  friend bool operator==(const SiteReversal&, const SiteReversal&) = default;
};

/// Entry j of x moves to position p(j).
DenseVector permute(const Permutation& p, const DenseVector& x);

/// Dense path of the site-reversal P(v_1 kron ... kron v_n) = v_n kron ... kron v_1.
DenseVector permute_tensor_factors(const DenseVector& x, std::size_t n, std::size_t d);

}  // namespace qftkron

#endif  // QFTKRON_PERMUTATION_HPP
