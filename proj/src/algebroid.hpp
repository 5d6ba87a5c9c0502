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
#ifndef ALGK_ALGEBROID_HPP
#define ALGK_ALGEBROID_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace algk {

class Multivector;
struct GerstenhaberStructure;

// A section of the underlying free module: one Poly coefficient per basis
// element.
using Section = std::vector<Poly>;

// Integer grading making the structure data homogeneous. Variables carry
// nonnegative weights (>= 1 for exact cohomology); basis elements may carry
// negative weights (a coordinate derivation has weight -1).
struct WeightData {
  std::vector<int> var_weights;
  std::vector<int> basis_weights;
};

struct Violation {
  std::string axiom;
  std::string witness;
  std::string lhs;
  std::string rhs;
};

struct AxiomReport {
  bool passed = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    passed = false;
    violations.push_back(std::move(v));
  }
  void merge(const AxiomReport& o) {
    if (!o.passed) passed = false;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

// Free-module Lie algebroid / Lie-Rinehart algebra over a PolyRing: anchor
// values on the basis, antisymmetric bracket table (stored for i < j only),
// optional weight grading. Immutable after construction.
class Algebroid {
 public:
  Algebroid(PolyRing ring, std::vector<std::string> basis_names,
            std::vector<Derivation> anchor,
            std::vector<std::vector<Section>> bracket_upper,
            std::optional<WeightData> weights = std::nullopt);

  const PolyRing& ring() const { return ring_; }
  std::size_t rank() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  int basis_index(const std::string& name) const;
  const Derivation& anchor(std::size_t i) const { return anchor_[i]; }
  const std::optional<WeightData>& weights() const { return weights_; }

  // [e_i, e_j] as a section, for any i, j (antisymmetry built in).
  Section bracket_basis(std::size_t i, std::size_t j) const;

  Section zero_section() const { return Section(rank(), Poly(ring_)); }
  Section basis_section(std::size_t i) const;

  bool structure_equals(const Algebroid& o) const;

 private:
  PolyRing ring_;
  std::vector<std::string> basis_names_;
  std::vector<Derivation> anchor_;
  std::vector<std::vector<Section>> bracket_;  // bracket_[i][j] valid for i < j
  std::optional<WeightData> weights_;
};

using AlgebroidPtr = std::shared_ptr<const Algebroid>;

void require_same_algebroid(const AlgebroidPtr& a, const AlgebroidPtr& b);

// Anchor of a general section by A-linearity.
Derivation anchor_of_section(const Algebroid& alg, const Section& u);

// The unique extension of the basis bracket by K-bilinearity and the Leibniz
// rule in each argument.
Section bracket_sections(const Algebroid& alg, const Section& u, const Section& v);

// Checks, exactly: Jacobi on all basis triples, anchor compatibility
// a[e_i,e_j] = [a e_i, a e_j]_c on all basis pairs, weight homogeneity when
// weights are declared, and the Leibniz rule on seeded random (f, D, D').
AxiomReport check_axioms(const Algebroid& alg, std::uint64_t seed = 0, int samples = 25);

// Homogeneity part only; used by the graded complexes to reject
// non-homogeneous input with a witness.
AxiomReport check_weight_homogeneity(const Algebroid& alg);

// O_X-linear map between algebroids over one ring. matrix is
// rank(target) x rank(source): phi(e'_j) = sum_i matrix[i][j] e_i.
class AlgebroidMorphism {
 public:
  AlgebroidMorphism(AlgebroidPtr source, AlgebroidPtr target,
                    std::vector<std::vector<Poly>> matrix);

  static AlgebroidMorphism identity(const AlgebroidPtr& alg);
  static AlgebroidMorphism compose(const AlgebroidMorphism& outer,
                                   const AlgebroidMorphism& inner);

  const AlgebroidPtr& source() const { return source_; }
  const AlgebroidPtr& target() const { return target_; }
  const std::vector<std::vector<Poly>>& matrix() const { return matrix_; }

  Section apply(const Section& src) const;
  Poly determinant() const;  // requires equal ranks

 private:
  AlgebroidPtr source_;
  AlgebroidPtr target_;
  std::vector<std::vector<Poly>> matrix_;
};

// Bracket compatibility and anchor compatibility on all source basis pairs;
// passing certifies (source, phi) as a target-rooted algebroid.
AxiomReport check_morphism(const AlgebroidMorphism& phi);

// Tangent algebroid of the ring: basis d/dx_1 ... d/dx_m, zero brackets,
// identity anchor; canonical weights w(x_i) = 1, w(e_i) = -1.
AlgebroidPtr tangent_algebroid(const PolyRing& ring);

// Logarithmic tangent algebroid of the monomial divisor selected by
// `log_var_indices`: basis x_i d/dx_i for selected variables (ring order),
// then the remaining coordinate derivations; all brackets zero; canonical
// weights 0 / -1.
AlgebroidPtr log_tangent_fixture(const PolyRing& ring, const std::vector<std::size_t>& log_var_indices);

// Cotangent algebroid of a Poisson bivector pi over the tangent algebroid:
// basis d<var>, anchor pi~(dx_i) = sum_j pi_ij d/dx_j, Koszul bracket
// [w, w'] = L_{pi~(w)} w' - L_{pi~(w')} w - d(pi(w, w')). Throws NotPoisson
// when [pi, pi] != 0 (witness coefficient in the message).
AlgebroidPtr cotangent_algebroid(const PolyRing& ring, const Multivector& pi);

namespace detail {
// Koszul-formula assembly without the [pi,pi]=0 guard; mutation tests feed
// non-Poisson bivectors through this.
AlgebroidPtr cotangent_algebroid_unchecked(const PolyRing& ring, const Multivector& pi);
}  // namespace detail

// Degree-1 extraction: bracket table from the Gerstenhaber bracket on
// degree-1 elements, anchor from D -> [D, .] on degree 0. Round-trips with
// the structure the algebroid induces on its exterior algebra.
AlgebroidPtr algebroid_from_gerstenhaber(const GerstenhaberStructure& g);

}  // namespace algk

#endif
