/*
   Copyright 2026 algebroid-kit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#include "qlinalg.hpp"

#include <algorithm>

namespace algk {

bool QMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw Error("SemanticError", "matrix product dimension mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error("SemanticError", "matrix-vector dimension mismatch");
  std::vector<Rational> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

RrefResult rref(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r.at(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
    Rational inv = Rational(1) / r.at(row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, col).is_zero()) continue;
      Rational f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols(), 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t quotient_dim(const QMatrix& d_out, const QMatrix& d_in) {
  if (d_out.cols() != d_in.rows())
    throw Error("NotAComplex", "differentials are not composable");
  if (!(d_out * d_in).is_zero())
    throw Error("NotAComplex", "composite differential is nonzero");
  std::size_t ker = d_out.cols() - rank(d_out);
  std::size_t im = rank(d_in);
  return ker - im;
}

std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error("SemanticError", "solve dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  auto [r, pivots] = rref(aug);
  for (auto p : pivots)
    if (p == a.cols()) return std::nullopt;  // inconsistent row
  std::vector<Rational> x(a.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, a.cols());
  return x;
}

}  // namespace algk
