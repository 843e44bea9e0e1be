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

#ifndef QFTKRON_DENSE_HPP
#define QFTKRON_DENSE_HPP

#include <initializer_list>
#include <span>
#include <vector>

#include "qftkron/types.hpp"

namespace qftkron {

/// Complex vector of fixed dimension.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t dim) : entries_(dim) {}
  explicit DenseVector(std::vector<cplx> entries) : entries_(std::move(entries)) {}
  DenseVector(std::initializer_list<cplx> entries) : entries_(entries) {}

  /// Canonical basis vector e_index of the given dimension.
  static DenseVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  cplx& operator[](std::size_t i) { return entries_[i]; }
  const cplx& operator[](std::size_t i) const { return entries_[i]; }

  std::span<cplx> span() { return entries_; }
  std::span<const cplx> span() const { return entries_; }
  const std::vector<cplx>& entries() const { return entries_; }

  double norm() const;

  DenseVector& operator+=(const DenseVector& other);
  DenseVector& operator-=(const DenseVector& other);
  DenseVector& operator*=(cplx s);

  friend bool operator==(const DenseVector&, const DenseVector&) = default;

 private:
  std::vector<cplx> entries_;
};

DenseVector operator+(DenseVector a, const DenseVector& b);
DenseVector operator-(DenseVector a, const DenseVector& b);
DenseVector operator*(cplx s, DenseVector v);

/// Inner product <a, b> = sum conj(a_i) b_i.
cplx inner(const DenseVector& a, const DenseVector& b);
double max_abs_diff(const DenseVector& a, const DenseVector& b);

/// Kronecker product of vectors, big-endian: a's index is the leading digit.
DenseVector kron(const DenseVector& a, const DenseVector& b);

/// Complex matrix stored row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const cplx> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<cplx> span() { return entries_; }
  std::span<const cplx> span() const { return entries_; }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;

  /// Column j as a vector.
  DenseVector column(std::size_t j) const;
  std::vector<cplx> diagonal_entries() const;

  /// Exact structural checks; `tol` bounds the off-pattern magnitudes.
  bool is_diagonal(double tol = 0.0) const;
  bool is_identity(double tol = 0.0) const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(cplx s);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(cplx s, DenseMatrix m);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseVector operator*(const DenseMatrix& a, const DenseVector& x);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

/// max_ij |(M M^H - I)_ij|. Requires a square matrix.
double unitarity_residual(const DenseMatrix& m);

/// Block matrix whose (i, j) block is a(i, j) * b.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Left fold of kron over `factors`; the first factor is the most
/// significant digit. An empty list yields the 1x1 identity.
DenseMatrix kron_all(std::span<const DenseMatrix> factors);

/// Block-diagonal matrix diag(a, b). Both inputs must be square.
DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b);

/// Integer power by repeated squaring. Square input only.
DenseMatrix matrix_power(const DenseMatrix& m, std::uint64_t p);

}  // namespace qftkron

#endif  // QFTKRON_DENSE_HPP
