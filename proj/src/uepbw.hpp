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
#ifndef ALGK_UEPBW_HPP
#define ALGK_UEPBW_HPP

#include <map>

#include "algebroid.hpp"

namespace algk {

// Nondecreasing generator-index word; the empty word is the scalar part.
using Word = std::vector<std::uint32_t>;

// Element of the universal enveloping algebra in PBW normal form: sum of
// f * e_{i_1} ... e_{i_k} with the full coefficient on the left and
// i_1 <= ... <= i_k. Uniqueness is the generalized PBW theorem; the
// rewriting system below computes the normal form.
class UEnvElement {
 public:
  explicit UEnvElement(AlgebroidPtr alg) : alg_(std::move(alg)) {}
  UEnvElement(AlgebroidPtr alg, std::map<Word, Poly> terms);

  static UEnvElement scalar(const AlgebroidPtr& alg, const Poly& f);
  static UEnvElement one(const AlgebroidPtr& alg);
  static UEnvElement generator(const AlgebroidPtr& alg, std::size_t i);

  const AlgebroidPtr& algebroid() const { return alg_; }
  const std::map<Word, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Max word length; 0 for scalars and the zero element.
  std::size_t filtration_degree() const;

  UEnvElement operator+(const UEnvElement& o) const;
  UEnvElement operator-(const UEnvElement& o) const;
  UEnvElement scaled(const Poly& f) const;  // left multiplication by A
  UEnvElement scaled(const Rational& c) const;
  bool operator==(const UEnvElement& o) const;

  std::string to_string() const;

 private:
  AlgebroidPtr alg_;
  std::map<Word, Poly> terms_;
};

// Product in normal form, rewriting with
//   e_j e_i -> e_i e_j + [e_j, e_i]   (j > i)
//   e_i f   -> f e_i + a(e_i)(f).
UEnvElement ue_mul(const UEnvElement& a, const UEnvElement& b);

namespace detail {
// Same product computed by bubbling generators rightward instead of
// leftward; confluence tests compare the two strategies.
UEnvElement ue_mul_alt(const UEnvElement& a, const UEnvElement& b);
}  // namespace detail

// Element of the symmetric algebra: words read as multisets, commutative
// product.
class SymElement {
 public:
  explicit SymElement(AlgebroidPtr alg) : alg_(std::move(alg)) {}
  SymElement(AlgebroidPtr alg, std::map<Word, Poly> terms);

  static SymElement scalar(const AlgebroidPtr& alg, const Poly& f);
  static SymElement generator(const AlgebroidPtr& alg, std::size_t i);

  const AlgebroidPtr& algebroid() const { return alg_; }
  const std::map<Word, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  SymElement operator+(const SymElement& o) const;
  SymElement operator-(const SymElement& o) const;
  SymElement scaled(const Poly& f) const;
  bool operator==(const SymElement& o) const;

  std::string to_string() const;

 private:
  AlgebroidPtr alg_;
  std::map<Word, Poly> terms_;
};

SymElement sym_mul(const SymElement& a, const SymElement& b);

// Leading symbol: keep only the top-filtration-degree terms.
SymElement ue_gr(const UEnvElement& a);

// PBW symmetrization: multiset {D_1..D_k} -> (1/k!) sum over permutations of
// the ordered products. ue_gr o symmetrize is the identity.
UEnvElement symmetrize(const SymElement& m);

// Functorial U(phi): e'_j -> sum_i matrix[i][j] e_i extended A-linearly and
// multiplicatively.
UEnvElement ue_apply_morphism(const AlgebroidMorphism& phi, const UEnvElement& a);
SymElement sym_apply_morphism(const AlgebroidMorphism& phi, const SymElement& a);

struct UeFunctorReport {
  AxiomReport algebra_map;  // U(phi)(ab) = U(phi)a U(phi)b
  AxiomReport gr_square;    // graded compatibility with the symmetric functor
  bool passed() const { return algebra_map.passed && gr_square.passed; }
};

// Exhaustive source monomials up to max_degree with seeded random
// coefficients.
UeFunctorReport ue_functor_check(const AlgebroidMorphism& phi, int max_degree, int samples,
                                 std::uint64_t seed);

// Expression grammar of the polynomial layer extended with basis-name atoms;
// products are noncommutative in written order.
UEnvElement ue_parse(const AlgebroidPtr& alg, const std::string& text);

}  // namespace algk

#endif
