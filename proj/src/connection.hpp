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
#ifndef ALGK_CONNECTION_HPP
#define ALGK_CONNECTION_HPP

#include "algebroid.hpp"

namespace algk {

// First-order operator with scalar symbol on a free module of rank r,
// split as (endomorphism matrix, symbol derivation):
// D(s) = matrix * s + symbol applied entrywise.
class AtiyahOperator {
 public:
  AtiyahOperator(std::size_t module_rank, std::vector<std::vector<Poly>> matrix,
                 Derivation symbol);

  static AtiyahOperator zero(const PolyRing& ring, std::size_t module_rank);

  std::size_t module_rank() const { return rank_; }
  const std::vector<std::vector<Poly>>& matrix() const { return matrix_; }
  const Derivation& symbol() const { return symbol_; }

  std::vector<Poly> apply(const std::vector<Poly>& s) const;

  AtiyahOperator operator+(const AtiyahOperator& o) const;
  AtiyahOperator operator-(const AtiyahOperator& o) const;
  AtiyahOperator scaled(const Poly& f) const;
  // Commutator [a, b]_c; again an Atiyah operator.
  static AtiyahOperator commutator(const AtiyahOperator& a, const AtiyahOperator& b);

  bool is_zero() const;
  bool matrix_is_zero() const;

 private:
  std::size_t rank_;
  std::vector<std::vector<Poly>> matrix_;
  Derivation symbol_;
};

// L-connection on a free module: one Atiyah operator per basis generator
// with symbol(op_i) = anchor(e_i) enforced by construction, extended to
// general sections A-linearly. Optional per-generator module weights feed
// the graded complexes.
class Connection {
 public:
  Connection(AlgebroidPtr alg, std::size_t module_rank,
             std::vector<std::vector<std::vector<Poly>>> matrices,
             std::optional<std::vector<int>> module_weights = std::nullopt);

  const AlgebroidPtr& algebroid() const { return alg_; }
  std::size_t module_rank() const { return rank_; }
  const AtiyahOperator& op(std::size_t i) const { return ops_[i]; }
  const std::optional<std::vector<int>>& module_weights() const { return module_weights_; }

  AtiyahOperator op_for_section(const Section& u) const;

 private:
  AlgebroidPtr alg_;
  std::size_t rank_;
  std::vector<AtiyahOperator> ops_;
  std::optional<std::vector<int>> module_weights_;
};

// R(e_i, e_j) = nabla_[e_i,e_j] - [nabla_i, nabla_j]_c; the symbol vanishes
// when the algebroid axioms hold (checked by check_flat).
AtiyahOperator curvature(const Connection& conn, std::size_t i, std::size_t j);

AxiomReport check_flat(const Connection& conn);

// (L', L)-connection nabla' = nabla o phi on the same module.
Connection compose_connection(const Connection& conn, const AlgebroidMorphism& phi);

// Trivial flat connection on the top exterior power (all multipliers zero);
// module weight = sum of basis weights when the algebroid is weighted.
Connection trivial_top_connection(const AlgebroidPtr& alg);

struct InducedTopResult {
  std::optional<Connection> connection;  // set unless obstructed
  Poly det;                              // h = det(phi)
  // Obstruction witness: generator index and the numerator that failed
  // exact division by h.
  std::optional<std::pair<std::size_t, Poly>> obstruction;
};

// Induced connection on the top power along an injective equal-rank
// morphism: multiplier g'_j = sum_i m_ij g_i + a(phi e'_j)(h) / h. Division
// may fail over the polynomial ring; the result then reports the witness
// instead of localizing.
InducedTopResult induced_top_connection(const Connection& top_conn,
                                        const AlgebroidMorphism& phi);

}  // namespace algk

#endif
