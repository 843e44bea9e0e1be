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

#include "qftkron/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qftkron/kernels.hpp"

namespace qftkron {

std::uint64_t checked_pow(std::uint64_t d, std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d != 0 && out > std::numeric_limits<std::uint64_t>::max() / d)
      throw std::overflow_error("d^n overflows 64 bits");
    out *= d;
  }
  return out;
}

std::size_t dense_dim(std::size_t d, std::size_t n, std::size_t limit) {
  std::uint64_t dim = 0;
  try {
    dim = checked_pow(d, n);
  } catch (const std::overflow_error&) {
    throw DenseLimitExceeded(std::numeric_limits<std::size_t>::max(), limit);
  }
  if (dim > limit) throw DenseLimitExceeded(static_cast<std::size_t>(dim), limit);
  return static_cast<std::size_t>(dim);
}

// ---- DenseVector ----------------------------------------------------------

DenseVector DenseVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("basis index out of range");
  DenseVector v(dim);
  v[index] = 1.0;
  return v;
}

double DenseVector::norm() const {
  double acc = 0.0;
  for (const auto& z : entries_) acc += std::norm(z);
  return std::sqrt(acc);
}

DenseVector& DenseVector::operator+=(const DenseVector& other) {
  if (dim() != other.dim()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

DenseVector& DenseVector::operator-=(const DenseVector& other) {
  if (dim() != other.dim()) throw std::invalid_argument("vector dimension mismatch");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

DenseVector& DenseVector::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

DenseVector operator+(DenseVector a, const DenseVector& b) { return a += b; }
DenseVector operator-(DenseVector a, const DenseVector& b) { return a -= b; }
DenseVector operator*(cplx s, DenseVector v) { return v *= s; }

cplx inner(const DenseVector& a, const DenseVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double max_abs_diff(const DenseVector& a, const DenseVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
  double out = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

DenseVector kron(const DenseVector& a, const DenseVector& b) {
  DenseVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return out;
}

// ---- DenseMatrix ----------------------------------------------------------

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("entry count does not match rows x cols");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const cplx> diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

DenseVector DenseMatrix::column(std::size_t j) const {
  DenseVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<cplx> DenseMatrix::diagonal_entries() const {
  std::vector<cplx> out(std::min(rows_, cols_));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (*this)(i, i);
  return out;
}

bool DenseMatrix::is_diagonal(double tol) const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && std::abs((*this)(i, j)) > tol) return false;
  return true;
}

bool DenseMatrix::is_identity(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const cplx expected = i == j ? cplx{1.0} : cplx{};
      if (std::abs((*this)(i, j) - expected) > tol) return false;
    }
  return true;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
DenseMatrix operator*(cplx s, DenseMatrix m) { return m *= s; }

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  DenseMatrix out(a.rows(), b.cols());
  kernels::omp::matmul(a.span(), b.span(), out.span(), a.rows(), a.cols(), b.cols());
  return out;
}

DenseVector operator*(const DenseMatrix& a, const DenseVector& x) {
  if (a.cols() != x.dim()) throw std::invalid_argument("matrix-vector dimension mismatch");
  DenseVector out(a.rows());
  kernels::omp::matvec(a.span(), x.span(), out.span(), a.rows(), a.cols());
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
  double out = 0.0;
  auto sa = a.span();
  auto sb = b.span();
  for (std::size_t i = 0; i < sa.size(); ++i) out = std::max(out, std::abs(sa[i] - sb[i]));
  return out;
}

double unitarity_residual(const DenseMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("unitarity check needs a square matrix");
  return max_abs_diff(m * m.adjoint(), DenseMatrix::identity(m.rows()));
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  kernels::omp::kron(a.span(), a.rows(), a.cols(), b.span(), b.rows(), b.cols(), out.span());
  return out;
}

DenseMatrix kron_all(std::span<const DenseMatrix> factors) {
  DenseMatrix out = DenseMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

DenseMatrix direct_sum(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.is_square() || !b.is_square())
    throw std::invalid_argument("direct_sum requires square matrices");
  const std::size_t n = a.rows() + b.rows();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

DenseMatrix matrix_power(const DenseMatrix& m, std::uint64_t p) {
  if (!m.is_square()) throw std::invalid_argument("matrix_power requires a square matrix");
  if (m.is_diagonal()) {
    // Entrywise, accumulated in extended precision.
    DenseMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::complex<long double> acc(1.0L), base(m(i, i).real(), m(i, i).imag());
      for (std::uint64_t q = p; q > 0; q >>= 1u) {
        if (q & 1u) acc *= base;
        base *= base;
      }
      out(i, i) = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
  }
  DenseMatrix result = DenseMatrix::identity(m.rows());
  DenseMatrix base = m;
  while (p > 0) {
    if (p & 1u) result = result * base;
    p >>= 1u;
    if (p > 0) base = base * base;
  }
  return result;
}

}  // namespace qftkron
