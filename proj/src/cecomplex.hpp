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
#ifndef ALGK_CECOMPLEX_HPP
#define ALGK_CECOMPLEX_HPP

#include <map>

#include "connection.hpp"
#include "exterior.hpp"

namespace algk {

// Form with values in a free module of rank r (per-mask vector of Poly).
class EForm {
 public:
  EForm(AlgebroidPtr alg, std::size_t module_rank)
      : alg_(std::move(alg)), rank_(module_rank) {}
  EForm(AlgebroidPtr alg, std::size_t module_rank,
        std::map<IndexMask, std::vector<Poly>> comp);

  static EForm from_form(const Form& f);  // rank-1 values

  const AlgebroidPtr& algebroid() const { return alg_; }
  std::size_t module_rank() const { return rank_; }
  const std::map<IndexMask, std::vector<Poly>>& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }
  std::vector<Poly> value(IndexMask m) const;
  Form to_form() const;  // rank-1 only

  EForm operator+(const EForm& o) const;
  EForm operator-(const EForm& o) const;
  bool operator==(const EForm& o) const;

 private:
  void prune();
  AlgebroidPtr alg_;
  std::size_t rank_;
  std::map<IndexMask, std::vector<Poly>> comp_;
};

// Chevalley-Eilenberg-de Rham complex of the algebroid: trivial coefficients
// or a flat connection on a free module (twisted). Construction rejects
// non-flat coefficients since the square of the differential would not
// vanish.
class CochainComplex {
 public:
  explicit CochainComplex(AlgebroidPtr alg);  // trivial coefficients
  CochainComplex(AlgebroidPtr alg, Connection conn);

  const AlgebroidPtr& algebroid() const { return alg_; }
  bool twisted() const { return conn_.has_value(); }
  const Connection* connection() const { return conn_ ? &*conn_ : nullptr; }
  std::size_t module_rank() const { return conn_ ? conn_->module_rank() : 1; }
  std::vector<int> module_weights() const;

  EForm differential(const EForm& omega) const;

 private:
  AlgebroidPtr alg_;
  std::optional<Connection> conn_;
};

// Trivial-coefficient CE differential, the displayed alternating sum
// evaluated exactly on basis monomials.
Form ce_differential(const Algebroid& alg, const Form& omega);

struct GradedDims {
  // (degree, weight) -> dimension; only computed pairs appear.
  std::map<std::pair<int, long>, std::size_t> dims;
  long min_weight = 0;
  long max_weight = 0;

  std::size_t dim(int k, long w) const {
    auto it = dims.find({k, w});
    return it == dims.end() ? 0 : it->second;
  }
};

// Exact cohomology dimensions per (form degree, weight) for weights up to
// max_weight. Requires a weight-homogeneous algebroid with all variable
// weights >= 1 (WeightUnbounded otherwise; NotHomogeneous with a witness
// when homogeneity fails).
GradedDims cohomology(const CochainComplex& complex, long max_weight);

// d_* on multivectors of the primal: the CE differential of Lstar
// transported through the positional identification of Lstar's dual basis
// with the primal basis.
Multivector dual_differential(const AlgebroidPtr& primal, const AlgebroidPtr& lstar,
                              const Multivector& p);

// Compatibility d_*[D1,D2] = [d_*D1,D2] + [D1,d_*D2] on all basis pairs and
// seeded random polynomial-coefficient section pairs; with optional rooting
// morphisms phi: L -> M, psi: Lstar -> M both checked by check_morphism.
AxiomReport check_bialgebroid(const AlgebroidPtr& primal, const AlgebroidPtr& lstar,
                              int samples, std::uint64_t seed,
                              const AlgebroidMorphism* phi = nullptr,
                              const AlgebroidMorphism* psi = nullptr);

// Verifies d_source(phi~* omega) = phi~*(d_target omega) exhaustively on
// basis forms and on seeded random polynomial-coefficient forms.
AxiomReport dual_cochain_map(const AlgebroidMorphism& phi, int samples, std::uint64_t seed);

// Internal helper shared with homology: per-(degree, weight) matrices of an
// operator between exterior-power weight pieces.
namespace detail {

struct WeightBasis {
  // Basis of the weight piece: (mask, module generator, monomial exponents).
  std::vector<std::tuple<IndexMask, std::size_t, Exponents>> elems;
  std::map<std::tuple<IndexMask, std::size_t, Exponents>, std::size_t> index;
};

std::vector<Exponents> monomials_of_weight(const PolyRing& ring,
                                           const std::vector<int>& var_weights, long w);

}  // namespace detail

}  // namespace algk

#endif
