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
#ifndef ALGK_QLINALG_HPP
#define ALGK_QLINALG_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace algk {

// Dense rectangular matrix of exact rationals.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static QMatrix identity(std::size_t n);
  QMatrix operator*(const QMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  QMatrix r;
  std::vector<std::size_t> pivots;  // pivot column per nonzero row, ascending
};

// Reduced row echelon form with deterministic pivoting (first nonzero row in
// column order).
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Basis of the right null space; size = cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// dim ker(d_out) - rank(d_in) for a composable pair with d_out * d_in = 0.
// Throws NotAComplex when the composite has a nonzero entry.
std::size_t quotient_dim(const QMatrix& d_out, const QMatrix& d_in);

// Solves A x = b; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const QMatrix& a, const std::vector<Rational>& b);

}  // namespace algk

#endif
