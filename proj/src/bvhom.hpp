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
#ifndef ALGK_BVHOM_HPP
#define ALGK_BVHOM_HPP

#include "cecomplex.hpp"

namespace algk {

// Degree-reversing isomorphism between multivectors and forms twisted by the
// top power: star(e_S) = sgn(S, S^c) eps_{S^c}, the top line trivialized by
// the basis top monomial. star_inv composes to the identity.
Form star(const Multivector& p);
Multivector star_inv(const Form& omega);

// Generating operator of the exterior algebra built from a flat connection
// on the top power: on degree k,
//   bv(P) = (-1)^k star_inv(d_nabla(star(P))).
// The per-degree sign is the frozen calibration making both the square-zero
// and the generating-identity checks pass; see bv_operator.
class BVOperator {
 public:
  const AlgebroidPtr& algebroid() const { return complex_.algebroid(); }
  const Connection& top_connection() const { return *complex_.connection(); }

  Multivector apply(const Multivector& p) const;

 private:
  explicit BVOperator(CochainComplex complex) : complex_(std::move(complex)) {}
  CochainComplex complex_;
  friend BVOperator bv_operator(const AlgebroidPtr& alg, const Connection& top_conn,
                                std::uint64_t seed, int validation_samples);
};

// Validates flatness, square-zero on all basis monomials, and the
// generating identity
//   [a,b] = (-1)^{|a|} (bv(a^b) - bv(a)^b - (-1)^{|a|} a^bv(b))
// on seeded random homogeneous pairs; throws SignCalibrationFailure if the
// frozen sign profile ever fails (an implementation bug, not a data error).
BVOperator bv_operator(const AlgebroidPtr& alg, const Connection& top_conn,
                       std::uint64_t seed = 0, int validation_samples = 50);

// Multipliers of the flat top connection recovered from the action of the
// operator on the top monomial; round-trips with the construction.
std::vector<Poly> recover_top_multipliers(const BVOperator& bv);

// Exact homology dimensions per (chain degree, weight).
GradedDims homology(const BVOperator& bv, long max_weight);

struct DualityPiece {
  int degree;  // chain degree k, paired with cohomology degree n-k
  long weight;
  std::size_t homology_dim;
  std::size_t cohomology_dim;
  bool dims_match;
  bool square_checked;   // factorization through the rooted maps
  bool square_commutes;
};

struct DualityReport {
  GradedDims homology_dims;
  GradedDims cohomology_dims;  // of (L, top power twisted), degree n-k
  bool dims_match = true;
  bool with_morphism = false;
  // Rooted run only:
  GradedDims sub_homology_dims;
  GradedDims sub_cohomology_dims;
  bool sub_dims_match = true;
  bool factorization_commutes = true;
  std::vector<DualityPiece> pieces;
};

// Dimension equality H_k(L, nabla) = H^{n-k}(L, top power) per weight; with
// an injective equal-rank morphism, additionally the factorization of the
// sub-duality through the induced maps, verified as matrices on
// kernel-basis representatives of each weight piece.
DualityReport duality_check(const AlgebroidPtr& alg, const Connection& top_conn,
                            const AlgebroidMorphism* phi, long max_weight);

}  // namespace algk

#endif
