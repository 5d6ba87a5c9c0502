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
#ifndef ALGK_EXTERIOR_HPP
#define ALGK_EXTERIOR_HPP

#include <map>

#include "algebroid.hpp"

namespace algk {

// Basis monomials of the exterior algebra are strictly increasing index
// tuples, encoded as bitmasks over {0 .. rank-1}.
using IndexMask = std::uint32_t;

int mask_degree(IndexMask m);
std::vector<std::size_t> mask_indices(IndexMask m);
// Sign of e_A ^ e_B relative to the sorted merge; 0 when A and B overlap.
int wedge_sign(IndexMask a, IndexMask b);

namespace detail {
using ExtTable = std::map<IndexMask, Poly>;
void table_add(ExtTable& t, IndexMask m, const Poly& p);
}  // namespace detail

// Element of the exterior algebra of the algebroid itself (multivector).
// The empty mask is the degree-0 part, a plain polynomial.
class Multivector {
 public:
  explicit Multivector(AlgebroidPtr alg) : alg_(std::move(alg)) {}
  Multivector(AlgebroidPtr alg, detail::ExtTable comp);

  static Multivector scalar(const AlgebroidPtr& alg, const Poly& f);
  static Multivector basis(const AlgebroidPtr& alg, IndexMask m);
  static Multivector from_section(const AlgebroidPtr& alg, const Section& s);

  const AlgebroidPtr& algebroid() const { return alg_; }
  const detail::ExtTable& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }
  // Homogeneous degree; nullopt for mixed, 0 for the zero element.
  std::optional<int> degree() const;
  Poly coefficient(IndexMask m) const;
  Section degree_one_section() const;

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector scaled(const Poly& f) const;
  Multivector scaled(const Rational& c) const;
  bool operator==(const Multivector& o) const;

  std::string to_string() const;

 private:
  AlgebroidPtr alg_;
  detail::ExtTable comp_;
};

// Element of the exterior algebra of the dual (a form); components are read
// against the dual basis eps_1 ... eps_n.
class Form {
 public:
  explicit Form(AlgebroidPtr alg) : alg_(std::move(alg)) {}
  Form(AlgebroidPtr alg, detail::ExtTable comp);

  static Form scalar(const AlgebroidPtr& alg, const Poly& f);
  static Form basis(const AlgebroidPtr& alg, IndexMask m);

  const AlgebroidPtr& algebroid() const { return alg_; }
  const detail::ExtTable& components() const { return comp_; }
  bool is_zero() const { return comp_.empty(); }
  std::optional<int> degree() const;
  Poly coefficient(IndexMask m) const;

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form scaled(const Poly& f) const;
  Form scaled(const Rational& c) const;
  bool operator==(const Form& o) const;

  std::string to_string() const;

 private:
  AlgebroidPtr alg_;
  detail::ExtTable comp_;
};

Multivector wedge(const Multivector& a, const Multivector& b);
Form wedge(const Form& a, const Form& b);

// Generalized Schouten-Nijenhuis bracket: on decomposables
//   [D_1^...^D_p, D_{p+1}^...^D_{p+q}]
//     = sum_{i<=p<j} (-1)^{i+j+p} [D_i,D_j] ^ D_1 ^ ... ^i ... ^j ... ,
// extended to degree-0 arguments by [D_1^...^D_p, f] =
// sum_i (-1)^{p-i} a(D_i)(f) D_1 ^ ... omit i ... ^ D_p.
Multivector sn_bracket(const Multivector& p, const Multivector& q);

// Determinant pairing of equal-degree elements.
Poly pairing(const Form& omega, const Multivector& p);
// Left interior product: (i_P omega)(Q) = omega(P ^ Q).
Form contract(const Form& omega, const Multivector& p);

// Cartan formula L_D = i_D d + d i_D on forms; on functions this is the
// anchor action.
Form lie_derivative(const Section& d, const Form& omega);

// Wedge extension of a morphism to multivectors.
Multivector apply_morphism(const AlgebroidMorphism& phi, const Multivector& p);
// Pullback of forms: (phi~* omega)(P') = omega(^phi P').
Form pullback_form(const AlgebroidMorphism& phi, const Form& omega);

// The standard Gerstenhaber structure on the exterior algebra; the bracket
// is always the derived SN bracket, no independent table exists.
struct GerstenhaberStructure {
  AlgebroidPtr algebroid;
};

GerstenhaberStructure gerstenhaber_from_algebroid(const AlgebroidPtr& alg);

// Randomized exact verification of graded commutativity/associativity of
// the wedge, graded antisymmetry, graded Jacobi and the Leibniz
// compatibility of the SN bracket, up to the given degree.
AxiomReport check_gerstenhaber(const AlgebroidPtr& alg, int max_degree, int samples,
                               std::uint64_t seed);

// ^phi is a Gerstenhaber algebra homomorphism: product and bracket
// compatibility on randomized homogeneous inputs.
AxiomReport gerstenhaber_morphism_check(const AlgebroidMorphism& phi, int max_degree,
                                        int samples, std::uint64_t seed);

Multivector random_multivector(const AlgebroidPtr& alg, int degree, class Rng& rng);
Form random_form(const AlgebroidPtr& alg, int degree, class Rng& rng);

}  // namespace algk

#endif
