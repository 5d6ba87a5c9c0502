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

// Constructions of algebroids that go through the exterior machinery: the
// cotangent algebroid of a Poisson bivector and the degree-1 extraction
// from a Gerstenhaber structure.

#include "algebroid.hpp"
#include "cecomplex.hpp"
#include "exterior.hpp"

namespace algk {

namespace detail {

AlgebroidPtr cotangent_algebroid_unchecked(const PolyRing& ring, const Multivector& pi) {
  AlgebroidPtr tangent = pi.algebroid();
  const std::size_t m = ring.var_count();
  if (!pi.is_zero() && pi.degree() != std::optional<int>(2))
    throw Error("DegreeError", "bivector must be homogeneous of degree 2");

  // Antisymmetric coefficient matrix pi_ij with pi = sum_{i<j} pi_ij e_i ^ e_j.
  std::vector<std::vector<Poly>> pimat(m, std::vector<Poly>(m, Poly(ring)));
  for (const auto& [mask, c] : pi.components()) {
    auto idx = mask_indices(mask);
    pimat[idx[0]][idx[1]] = c;
    pimat[idx[1]][idx[0]] = -c;
  }

  std::vector<std::string> names;
  std::vector<Derivation> anchor;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("d" + ring.var_name(i));
    anchor.emplace_back(ring, pimat[i]);
  }

  // Koszul bracket through the tangent algebroid's Lie derivative:
  // [dx_i, dx_j] = L_{pi~(dx_i)} dx_j - L_{pi~(dx_j)} dx_i - d(pi(dx_i, dx_j)).
  std::vector<std::vector<Section>> bracket(m, std::vector<Section>(m, Section(m, Poly(ring))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Form dxi = Form::basis(tangent, IndexMask(1) << i);
      Form dxj = Form::basis(tangent, IndexMask(1) << j);
      Form k = lie_derivative(pimat[i], dxj) - lie_derivative(pimat[j], dxi) -
               ce_differential(*tangent, Form::scalar(tangent, pimat[i][j]));
      Section c(m, Poly(ring));
      for (const auto& [mask, p] : k.components()) {
        auto idx = mask_indices(mask);
        if (idx.size() != 1) throw Error("InternalError", "Koszul bracket is not degree 1");
        c[idx[0]] = p;
      }
      bracket[i][j] = std::move(c);
    }

  return std::make_shared<Algebroid>(ring, std::move(names), std::move(anchor),
                                     std::move(bracket));
}

}  // namespace detail

AlgebroidPtr cotangent_algebroid(const PolyRing& ring, const Multivector& pi) {
  AlgebroidPtr tangent_ref = tangent_algebroid(ring);
  require_same_algebroid(tangent_ref, pi.algebroid());
  Multivector schouten = sn_bracket(pi, pi);
  if (!schouten.is_zero()) {
    auto it = schouten.components().begin();
    throw Error("NotPoisson", "[pi,pi] has nonzero coefficient " + it->second.to_string() +
                                  " on basis mask " + std::to_string(it->first));
  }
  return detail::cotangent_algebroid_unchecked(ring, pi);
}

AlgebroidPtr algebroid_from_gerstenhaber(const GerstenhaberStructure& g) {
  const AlgebroidPtr& carrier = g.algebroid;
  const PolyRing& ring = carrier->ring();
  const std::size_t n = carrier->rank();

  // Anchor from the degree-0 action D -> [D, .]: a derivation of the ring is
  // determined by its values on the variables.
  std::vector<Derivation> anchor;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Poly> comps;
    Multivector ei = Multivector::basis(carrier, IndexMask(1) << i);
    for (std::size_t j = 0; j < ring.var_count(); ++j) {
      Multivector b =
          sn_bracket(ei, Multivector::scalar(carrier, Poly::variable(ring, j)));
      comps.push_back(b.coefficient(0));
    }
    anchor.emplace_back(ring, std::move(comps));
  }

  // Bracket table from the degree-1 restriction of the G-bracket.
  std::vector<std::vector<Section>> bracket(n, std::vector<Section>(n, Section(n, Poly(ring))));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Multivector b = sn_bracket(Multivector::basis(carrier, IndexMask(1) << i),
                                 Multivector::basis(carrier, IndexMask(1) << j));
      bracket[i][j] = b.degree_one_section();
    }

  return std::make_shared<Algebroid>(ring, carrier->basis_names(), std::move(anchor),
                                     std::move(bracket), carrier->weights());
}

}  // namespace algk
