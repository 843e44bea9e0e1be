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

#include "qftkron/permutation.hpp"

#include <algorithm>

namespace qftkron {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw std::invalid_argument("image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<std::size_t> image(size);
  for (std::size_t j = 0; j < size; ++j) image[j] = j;
  return Permutation(std::move(image));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<std::size_t> image(size());
  for (std::size_t j = 0; j < size(); ++j) image[j] = image_[other(j)];
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> image(size());
  for (std::size_t j = 0; j < size(); ++j) image[image_[j]] = j;
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < size(); ++j)
    if (image_[j] != j) return false;
  return true;
}

DenseMatrix Permutation::matrix() const {
  DenseMatrix m(size(), size());
  for (std::size_t j = 0; j < size(); ++j) m(image_[j], j) = 1.0;
  return m;
}

std::vector<std::size_t> to_digits(std::size_t j, std::size_t n, std::size_t d) {
  std::vector<std::size_t> digits(n);
  for (std::size_t s = n; s-- > 0;) {
    digits[s] = j % d;
    j /= d;
  }
  if (j != 0) throw std::out_of_range("index does not fit in n base-d digits");
  return digits;
}

std::size_t from_digits(const std::vector<std::size_t>& digits, std::size_t d) {
  std::size_t j = 0;
  for (std::size_t digit : digits) {
    if (digit >= d) throw std::out_of_range("digit out of range");
    j = j * d + digit;
  }
  return j;
}

Permutation digit_reversal(std::size_t n, std::size_t d) {
  if (n < 1) throw std::invalid_argument("digit_reversal needs n >= 1");
  if (d < 2) throw std::invalid_argument("digit_reversal needs d >= 2");
  const auto size = static_cast<std::size_t>(checked_pow(d, n));
  std::vector<std::size_t> image(size);
  for (std::size_t j = 0; j < size; ++j) {
    std::size_t rest = j;
    std::size_t reversed = 0;
    for (std::size_t s = 0; s < n; ++s) {
      reversed = reversed * d + rest % d;
      rest /= d;
    }
    image[j] = reversed;
  }
  return Permutation(std::move(image));
}

DenseVector permute(const Permutation& p, const DenseVector& x) {
  if (p.size() != x.dim()) throw std::invalid_argument("permutation size does not match vector");
  DenseVector out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) out[p(j)] = x[j];
  return out;
}

DenseVector permute_tensor_factors(const DenseVector& x, std::size_t n, std::size_t d) {
  if (checked_pow(d, n) != x.dim())
    throw std::invalid_argument("vector dimension is not d^n");
  return permute(digit_reversal(n, d), x);
}

}  // namespace qftkron
