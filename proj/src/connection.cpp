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
#include "connection.hpp"

#include <numeric>

namespace algk {

AtiyahOperator::AtiyahOperator(std::size_t module_rank,
                               std::vector<std::vector<Poly>> matrix, Derivation symbol)
    : rank_(module_rank), matrix_(std::move(matrix)), symbol_(std::move(symbol)) {
  if (matrix_.size() != rank_)
    throw Error("SemanticError", "Atiyah operator matrix row count mismatch");
  for (const auto& row : matrix_) {
    if (row.size() != rank_)
      throw Error("SemanticError", "Atiyah operator matrix column count mismatch");
    for (const auto& p : row) require_same_ring(p.ring(), symbol_.ring());
  }
}

AtiyahOperator AtiyahOperator::zero(const PolyRing& ring, std::size_t module_rank) {
  std::vector<std::vector<Poly>> m(module_rank, std::vector<Poly>(module_rank, Poly(ring)));
  return AtiyahOperator(module_rank, std::move(m), Derivation(ring));
}

std::vector<Poly> AtiyahOperator::apply(const std::vector<Poly>& s) const {
  if (s.size() != rank_) throw Error("RankMismatch", "module section length mismatch");
  std::vector<Poly> out(rank_, Poly(symbol_.ring()));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j)
      if (!matrix_[i][j].is_zero() && !s[j].is_zero())
        out[i] = out[i] + matrix_[i][j] * s[j];
    out[i] = out[i] + symbol_.apply(s[i]);
  }
  return out;
}

AtiyahOperator AtiyahOperator::operator+(const AtiyahOperator& o) const {
  if (rank_ != o.rank_) throw Error("RankMismatch", "operator rank mismatch");
  auto m = matrix_;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m[i][j] = m[i][j] + o.matrix_[i][j];
  return AtiyahOperator(rank_, std::move(m), symbol_ + o.symbol_);
}

AtiyahOperator AtiyahOperator::operator-(const AtiyahOperator& o) const {
  if (rank_ != o.rank_) throw Error("RankMismatch", "operator rank mismatch");
  auto m = matrix_;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) m[i][j] = m[i][j] - o.matrix_[i][j];
  return AtiyahOperator(rank_, std::move(m), symbol_ - o.symbol_);
}

AtiyahOperator AtiyahOperator::scaled(const Poly& f) const {
  auto m = matrix_;
  for (auto& row : m)
    for (auto& p : row) p = p * f;
  return AtiyahOperator(rank_, std::move(m), symbol_.scaled(f));
}

AtiyahOperator AtiyahOperator::commutator(const AtiyahOperator& a, const AtiyahOperator& b) {
  if (a.rank_ != b.rank_) throw Error("RankMismatch", "operator rank mismatch");
  const std::size_t r = a.rank_;
  const PolyRing& ring = a.symbol_.ring();
  std::vector<std::vector<Poly>> m(r, std::vector<Poly>(r, Poly(ring)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Poly acc(ring);
      for (std::size_t k = 0; k < r; ++k)
        acc = acc + a.matrix_[i][k] * b.matrix_[k][j] - b.matrix_[i][k] * a.matrix_[k][j];
      acc = acc + a.symbol_.apply(b.matrix_[i][j]) - b.symbol_.apply(a.matrix_[i][j]);
      m[i][j] = acc;
    }
  return AtiyahOperator(r, std::move(m), Derivation::commutator(a.symbol_, b.symbol_));
}

bool AtiyahOperator::is_zero() const { return matrix_is_zero() && symbol_.is_zero(); }

bool AtiyahOperator::matrix_is_zero() const {
  for (const auto& row : matrix_)
    for (const auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

Connection::Connection(AlgebroidPtr alg, std::size_t module_rank,
                       std::vector<std::vector<std::vector<Poly>>> matrices,
                       std::optional<std::vector<int>> module_weights)
    : alg_(std::move(alg)), rank_(module_rank), module_weights_(std::move(module_weights)) {
  if (matrices.size() != alg_->rank())
    throw Error("SemanticError", "connection needs one operator per generator");
  for (std::size_t i = 0; i < matrices.size(); ++i)
    ops_.emplace_back(rank_, std::move(matrices[i]), alg_->anchor(i));
  if (module_weights_ && module_weights_->size() != rank_)
    throw Error("SemanticError", "module weight count mismatch");
}

AtiyahOperator Connection::op_for_section(const Section& u) const {
  if (u.size() != alg_->rank())
    throw Error("RankMismatch", "section length does not match algebroid rank");
  AtiyahOperator acc = AtiyahOperator::zero(alg_->ring(), rank_);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!u[i].is_zero()) acc = acc + ops_[i].scaled(u[i]);
  return acc;
}

AtiyahOperator curvature(const Connection& conn, std::size_t i, std::size_t j) {
  AtiyahOperator lhs = conn.op_for_section(conn.algebroid()->bracket_basis(i, j));
  AtiyahOperator rhs = AtiyahOperator::commutator(conn.op(i), conn.op(j));
  return lhs - rhs;
}

AxiomReport check_flat(const Connection& conn) {
  AxiomReport rep;
  const std::size_t n = conn.algebroid()->rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      AtiyahOperator r = curvature(conn, i, j);
      if (!r.symbol().is_zero())
        rep.add({"curvature-symbol",
                 "(" + conn.algebroid()->basis_names()[i] + "," +
                     conn.algebroid()->basis_names()[j] + ")",
                 r.symbol().to_string(), "0"});
      if (!r.matrix_is_zero()) {
        std::string lhs;
        for (const auto& row : r.matrix())
          for (const auto& p : row) lhs += (lhs.empty() ? "" : ", ") + p.to_string();
        rep.add({"flatness",
                 "(" + conn.algebroid()->basis_names()[i] + "," +
                     conn.algebroid()->basis_names()[j] + ")",
                 lhs, "0"});
      }
    }
  return rep;
}

Connection compose_connection(const Connection& conn, const AlgebroidMorphism& phi) {
  require_same_algebroid(conn.algebroid(), phi.target());
  const std::size_t r = conn.module_rank();
  const Algebroid& src = *phi.source();
  std::vector<std::vector<std::vector<Poly>>> mats;
  for (std::size_t j = 0; j < src.rank(); ++j) {
    // Matrix part of nabla_{phi(e'_j)}; the symbol is the source anchor by
    // morphism compatibility and is attached by the Connection constructor.
    AtiyahOperator op = conn.op_for_section(phi.apply(src.basis_section(j)));
    mats.push_back(op.matrix());
    (void)r;
  }
  return Connection(phi.source(), conn.module_rank(), std::move(mats),
                    conn.module_weights());
}

Connection trivial_top_connection(const AlgebroidPtr& alg) {
  std::vector<std::vector<std::vector<Poly>>> mats(
      alg->rank(), {{Poly(alg->ring())}});
  std::optional<std::vector<int>> mw;
  if (alg->weights()) {
    int total = std::accumulate(alg->weights()->basis_weights.begin(),
                                alg->weights()->basis_weights.end(), 0);
    mw = std::vector<int>{total};
  }
  return Connection(alg, 1, std::move(mats), std::move(mw));
}

InducedTopResult induced_top_connection(const Connection& top_conn,
                                        const AlgebroidMorphism& phi) {
  require_same_algebroid(top_conn.algebroid(), phi.target());
  if (top_conn.module_rank() != 1)
    throw Error("RankMismatch", "induced connection expects a rank-1 module (top power)");
  const Algebroid& src = *phi.source();
  const Algebroid& tgt = *phi.target();
  if (src.rank() != tgt.rank())
    throw Error("RankMismatch", "induced connection needs equal ranks");
  Poly h = phi.determinant();
  if (h.is_zero()) throw Error("NotInjective", "morphism determinant vanishes");
  if (!check_flat(top_conn).passed)
    throw Error("NonFlatInput", "input top connection is not flat");

  InducedTopResult result;
  result.det = h;
  std::vector<std::vector<std::vector<Poly>>> mats;
  for (std::size_t j = 0; j < src.rank(); ++j) {
    Section img = phi.apply(src.basis_section(j));
    Poly g(src.ring());
    for (std::size_t i = 0; i < tgt.rank(); ++i)
      g = g + img[i] * top_conn.op(i).matrix()[0][0];
    Poly numerator = anchor_of_section(tgt, img).apply(h);
    auto q = poly_divide_exact(numerator, h);
    if (!q) {
      result.obstruction = {j, numerator};
      return result;
    }
    mats.push_back({{g + *q}});
  }
  std::optional<std::vector<int>> mw;
  if (src.weights()) {
    int total = std::accumulate(src.weights()->basis_weights.begin(),
                                src.weights()->basis_weights.end(), 0);
    mw = std::vector<int>{total};
  }
  Connection induced(phi.source(), 1, std::move(mats), std::move(mw));
  if (!check_flat(induced).passed)
    throw Error("InternalError", "induced top connection failed flatness");
  result.connection = std::move(induced);
  return result;
}

}  // namespace algk
