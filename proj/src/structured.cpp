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

#include "qftkron/structured.hpp"

#include <algorithm>

#include "qftkron/kernels.hpp"

namespace qftkron {

DenseMatrix projector(std::size_t d, std::size_t level) {
  if (level >= d) throw std::out_of_range("projector level out of range");
  DenseMatrix e(d, d);
  e(level, level) = 1.0;
  return e;
}

KronTerm make_term(std::size_t n_sites, std::size_t d, cplx coefficient,
                   const std::map<std::size_t, DenseMatrix>& local) {
  KronTerm term{coefficient, std::vector<DenseMatrix>(n_sites, DenseMatrix::identity(d))};
  for (const auto& [site, m] : local) {
    if (site >= n_sites) throw std::out_of_range("site index out of range");
    term.factors[site] = m;
  }
  return term;
}

StructuredOperator::StructuredOperator(std::size_t n_sites, std::size_t local_dim,
                                       std::vector<KronTerm> terms)
    : n_sites_(n_sites), local_dim_(local_dim), terms_(std::move(terms)) {
  if (local_dim_ == 0) throw std::invalid_argument("local dimension must be positive");
  for (const auto& term : terms_) {
    if (term.factors.size() != n_sites_)
      throw std::invalid_argument("term has wrong number of site factors");
    for (const auto& f : term.factors)
      if (f.rows() != local_dim_ || f.cols() != local_dim_)
        throw std::invalid_argument("site factor is not local_dim x local_dim");
  }
}

StructuredOperator StructuredOperator::identity(std::size_t n_sites, std::size_t local_dim) {
  return {n_sites, local_dim, {make_term(n_sites, local_dim, 1.0, {})}};
}

StructuredOperator StructuredOperator::local(std::size_t n_sites, std::size_t local_dim,
                                             std::size_t site, const DenseMatrix& m) {
  return {n_sites, local_dim, {make_term(n_sites, local_dim, 1.0, {{site, m}})}};
}

StructuredOperator StructuredOperator::adjoint() const {
  std::vector<KronTerm> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    KronTerm t{std::conj(term.coefficient), {}};
    t.factors.reserve(term.factors.size());
    for (const auto& f : term.factors) t.factors.push_back(f.adjoint());
    out.push_back(std::move(t));
  }
  return {n_sites_, local_dim_, std::move(out)};
}

std::vector<std::size_t> StructuredOperator::support() const {
  std::vector<std::size_t> sites;
  for (std::size_t s = 0; s < n_sites_; ++s) {
    const bool active = std::any_of(terms_.begin(), terms_.end(), [&](const KronTerm& t) {
      return !t.factors[s].is_identity();
    });
    if (active) sites.push_back(s);
  }
  return sites;
}

StructuredOperator StructuredOperator::restricted(const std::vector<std::size_t>& sites) const {
  for (std::size_t s = 0; s < n_sites_; ++s) {
    if (std::find(sites.begin(), sites.end(), s) != sites.end()) continue;
    for (const auto& t : terms_)
      if (!t.factors[s].is_identity())
        throw std::invalid_argument("cannot drop a site that carries a non-identity factor");
  }
  std::vector<KronTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    KronTerm r{t.coefficient, {}};
    for (std::size_t s : sites) {
      if (s >= n_sites_) throw std::out_of_range("site index out of range");
      r.factors.push_back(t.factors[s]);
    }
    out.push_back(std::move(r));
  }
  return {sites.size(), local_dim_, std::move(out)};
}

namespace {

bool is_zero(const DenseMatrix& m) {
  auto s = m.span();
  return std::all_of(s.begin(), s.end(), [](const cplx& z) { return z == cplx{}; });
}

}  // namespace

StructuredOperator StructuredOperator::operator*(const StructuredOperator& rhs) const {
  if (n_sites_ != rhs.n_sites_ || local_dim_ != rhs.local_dim_)
    throw std::invalid_argument("operator product shape mismatch");
  std::vector<KronTerm> out;
  for (const auto& a : terms_)
    for (const auto& b : rhs.terms_) {
      KronTerm t{a.coefficient * b.coefficient, {}};
      bool zero = false;
      for (std::size_t s = 0; s < n_sites_ && !zero; ++s) {
        t.factors.push_back(a.factors[s] * b.factors[s]);
        zero = is_zero(t.factors.back());
      }
      if (!zero) out.push_back(std::move(t));
    }
  return {n_sites_, local_dim_, std::move(out)};
}

DenseMatrix expand(const StructuredOperator& op, std::size_t dense_limit) {
  const std::size_t dim = dense_dim(op.local_dim(), op.n_sites(), dense_limit);
  DenseMatrix out(dim, dim);
  for (const auto& term : op.terms()) {
    if (term.coefficient == cplx{}) continue;
    DenseMatrix product = kron_all(term.factors);
    product *= term.coefficient;
    out += product;
  }
  return out;
}

namespace {

enum class Kernels { kParallel, kSerial };

template <Kernels K>
DenseVector apply_impl(const StructuredOperator& op, const DenseVector& x) {
  const std::uint64_t dim = op.dim();
  if (x.dim() != dim) throw std::invalid_argument("vector dimension does not match operator");
  DenseVector y(x.dim());
  DenseVector work(x.dim());
  for (const auto& term : op.terms()) {
    if (term.coefficient == cplx{}) continue;
    if (std::any_of(term.factors.begin(), term.factors.end(), is_zero)) continue;
    work = x;
    for (std::size_t s = 0; s < op.n_sites(); ++s) {
      const DenseMatrix& f = term.factors[s];
      if (f.is_identity()) continue;
      const auto layout = kernels::SiteLayout::make(op.n_sites(), op.local_dim(), s);
      if (f.is_diagonal()) {
        const auto diag = f.diagonal_entries();
        if constexpr (K == Kernels::kParallel)
          kernels::omp::apply_site_diagonal(work.span(), layout, diag);
        else
          kernels::serial::apply_site_diagonal(work.span(), layout, diag);
      } else {
        if constexpr (K == Kernels::kParallel)
          kernels::omp::apply_site(work.span(), layout, f.span());
        else
          kernels::serial::apply_site(work.span(), layout, f.span());
      }
    }
    if constexpr (K == Kernels::kParallel)
      kernels::omp::axpy(term.coefficient, work.span(), y.span());
    else
      kernels::serial::axpy(term.coefficient, work.span(), y.span());
  }
  return y;
}

}  // namespace

DenseVector apply_structured(const StructuredOperator& op, const DenseVector& x) {
  return apply_impl<Kernels::kParallel>(op, x);
}

DenseVector apply_structured_reference(const StructuredOperator& op, const DenseVector& x) {
  return apply_impl<Kernels::kSerial>(op, x);
}

DenseVector SparseMatrix::operator*(const DenseVector& x) const {
  if (x.dim() != cols) throw std::invalid_argument("sparse product dimension mismatch");
  DenseVector y(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    cplx acc = 0.0;
    for (std::size_t k = row_start[r]; k < row_start[r + 1]; ++k) acc += val[k] * x[col[k]];
    y[r] = acc;
  }
  return y;
}

SparseMatrix to_sparse(const StructuredOperator& op, std::size_t dense_limit) {
  const std::size_t n = op.n_sites(), d = op.local_dim();
  const std::size_t dim = dense_dim(d, n, dense_limit);

  // rows_of[t][s][a]: nonzero (column, value) pairs of row a of term t at site s
  using Row = std::vector<std::pair<std::size_t, cplx>>;
  std::vector<std::vector<std::vector<Row>>> rows_of;
  for (const auto& term : op.terms()) {
    auto& per_site = rows_of.emplace_back(n, std::vector<Row>(d));
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (term.factors[s](a, b) != cplx(0.0)) per_site[s][a].emplace_back(b, term.factors[s](a, b));
  }

  std::vector<Row> rows(dim);
  const long long count = static_cast<long long>(dim);
#pragma omp parallel for schedule(static) if (dim >= 1024)
  for (long long rr = 0; rr < count; ++rr) {
    const auto r = static_cast<std::size_t>(rr);
    std::vector<std::size_t> digit(n);
    for (std::size_t s = n, rest = r; s-- > 0; rest /= d) digit[s] = rest % d;
    Row& out = rows[r];
    std::vector<std::size_t> pick(n);
    for (std::size_t t = 0; t < rows_of.size(); ++t) {
      const auto& per_site = rows_of[t];
      bool empty = false;
      for (std::size_t s = 0; s < n; ++s) empty = empty || per_site[s][digit[s]].empty();
      if (empty) continue;
      std::fill(pick.begin(), pick.end(), 0);
      while (true) {
        std::size_t c = 0;
        cplx v = op.terms()[t].coefficient;
        for (std::size_t s = 0; s < n; ++s) {
          const auto& [b, m] = per_site[s][digit[s]][pick[s]];
          c = c * d + b;
          v *= m;
        }
        out.emplace_back(c, v);
        std::size_t s = n;
        while (s-- > 0) {
          if (++pick[s] < per_site[s][digit[s]].size()) break;
          pick[s] = 0;
        }
        if (s == static_cast<std::size_t>(-1)) break;
      }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Row merged;
    for (const auto& e : out) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(e);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == cplx(0.0); });
    out = std::move(merged);
  }

  SparseMatrix m;
  m.rows = m.cols = dim;
  m.row_start.reserve(dim + 1);
  m.row_start.push_back(0);
  for (const auto& row : rows) {
    for (const auto& [c, v] : row) {
      m.col.push_back(c);
      m.val.push_back(v);
    }
    m.row_start.push_back(m.col.size());
  }
  return m;
}

}  // namespace qftkron
