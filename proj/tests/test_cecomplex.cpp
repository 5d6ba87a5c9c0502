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
#include <doctest.h>

#include "bvhom.hpp"
#include "cecomplex.hpp"
#include "fixtures.hpp"
#include "rng.hpp"

using namespace algk;

TEST_CASE("ce differential examples") {
  AlgebroidPtr t1 = fixture("tangent-A1").algebroid;
  Poly x = Poly::variable(t1->ring(), 0);
  // d(x^2) = 2x eps
  CHECK(ce_differential(*t1, Form::scalar(t1, x * x)) ==
        Form::basis(t1, 0b1).scaled(x.scaled(Rational(2))));

  AlgebroidPtr logxy = fixture("log-xy").algebroid;
  // d(x) = x eps1 on the log fixture.
  CHECK(ce_differential(*logxy, Form::scalar(logxy, Poly::variable(logxy->ring(), 0))) ==
        Form::basis(logxy, 0b01).scaled(Poly::variable(logxy->ring(), 0)));
}

TEST_CASE("d^2 = 0 and the graded Leibniz rule") {
  for (const auto& name : fixture_names()) {
    AlgebroidPtr alg = fixture(name).algebroid;
    Rng rng(5);
    for (int iter = 0; iter < 50; ++iter) {
      Form f = random_form(alg, static_cast<int>(rng.range(0, (long)alg->rank())), rng);
      CHECK(ce_differential(*alg, ce_differential(*alg, f)).is_zero());
      Form g = random_form(alg, static_cast<int>(rng.range(0, (long)alg->rank())), rng);
      auto deg = f.degree();
      if (!deg) continue;
      Rational sign(*deg % 2 == 0 ? 1 : -1, 1);
      CHECK(ce_differential(*alg, wedge(f, g)) ==
            wedge(ce_differential(*alg, f), g) +
                wedge(f, ce_differential(*alg, g)).scaled(sign));
    }
  }
}

TEST_CASE("cohomology of the affine line matches the antiderivative oracle") {
  AlgebroidPtr t1 = fixture("tangent-A1").algebroid;
  GradedDims dims = cohomology(CochainComplex(t1), 6);

  // Oracle: H^0 is the constants; every weight-w piece of degree 1 is hit by
  // the explicit antiderivative, so H^1 vanishes.
  const PolyRing& rx = t1->ring();
  for (long w = dims.min_weight; w <= 6; ++w) {
    CHECK(dims.dim(0, w) == (w == 0 ? 1u : 0u));
    for (const auto& e : detail::monomials_of_weight(rx, {1}, w - 1)) {
      // g = x^k eps has antiderivative f = x^{k+1}/(k+1).
      Exponents fe = e;
      fe[0] += 1;
      Poly f = Poly::monomial(rx, fe, Rational(1, static_cast<long>(fe[0])));
      CHECK(ce_differential(*t1, Form::scalar(t1, f)) ==
            Form::basis(t1, 0b1).scaled(Poly::monomial(rx, e, 1)));
    }
    CHECK(dims.dim(1, w) == 0);
  }
}

TEST_CASE("cohomology of the affine plane vanishes in positive degrees") {
  AlgebroidPtr t2 = fixture("tangent-A2").algebroid;
  GradedDims dims = cohomology(CochainComplex(t2), 6);
  long total = 0;
  for (const auto& [kw, d] : dims.dims) {
    if (kw.first == 0)
      CHECK(d == (kw.second == 0 ? 1u : 0u));
    else
      CHECK(d == 0);
    total += static_cast<long>(d);
  }
  CHECK(total == 1);

  // Euler-homotopy oracle: on a weight-w piece with w > 0, the identity
  // L_E = d i_E + i_E d acts as multiplication by w, so closed implies
  // exact; pieces with w <= 0 and k >= 1 are empty.
  const PolyRing& rxy = t2->ring();
  Section euler{Poly::variable(rxy, 0), Poly::variable(rxy, 1)};
  Multivector ev = Multivector::from_section(t2, euler);
  Rng rng(31);
  for (int iter = 0; iter < 80; ++iter) {
    int k = static_cast<int>(rng.range(1, 2));
    Form w = random_form(t2, k, rng);
    Form lhs = contract(ce_differential(*t2, w), ev) +
               ce_differential(*t2, contract(w, ev));
    // Compare weight piece by weight piece.
    std::map<long, detail::ExtTable> by_weight;
    for (const auto& [m, p] : w.components())
      for (const auto& [e, c] : p.terms()) {
        long wt = monomial_weight(e, {1, 1}) + mask_degree(m);
        detail::table_add(by_weight[wt], m, Poly::monomial(rxy, e, c));
      }
    Form expected(t2);
    for (const auto& [wt, tbl] : by_weight)
      expected = expected + Form(t2, tbl).scaled(Rational(wt, 1));
    CHECK(lhs == expected);
  }
}

TEST_CASE("cohomology of sl2 is (1,0,0,1)") {
  AlgebroidPtr sl2 = fixture("sl2").algebroid;
  GradedDims dims = cohomology(CochainComplex(sl2), 0);
  CHECK(dims.dim(0, 0) == 1);
  CHECK(dims.dim(1, 0) == 0);
  CHECK(dims.dim(2, 0) == 0);
  CHECK(dims.dim(3, 0) == 1);
}

TEST_CASE("cohomology of the log line finds the dlog class") {
  AlgebroidPtr logx = fixture("log-x").algebroid;
  GradedDims dims = cohomology(CochainComplex(logx), 6);
  for (long w = dims.min_weight; w <= 6; ++w) {
    CHECK(dims.dim(0, w) == (w == 0 ? 1u : 0u));
    CHECK(dims.dim(1, w) == (w == 0 ? 1u : 0u));
  }
}

TEST_CASE("weight errors") {
  PolyRing rx = PolyRing::create({"x"});
  // No weights declared.
  std::vector<Derivation> anchor{Derivation::coordinate(rx, 0)};
  std::vector<std::vector<Section>> br(1, std::vector<Section>(1, Section(1, Poly(rx))));
  auto bare = std::make_shared<Algebroid>(rx, std::vector<std::string>{"e1"},
                                          std::move(anchor), std::move(br));
  CHECK_THROWS_AS(cohomology(CochainComplex(bare), 3), Error);

  // Weight zero variable: pieces would be infinite-dimensional.
  std::vector<Derivation> anchor2{Derivation::coordinate(rx, 0)};
  std::vector<std::vector<Section>> br2(1, std::vector<Section>(1, Section(1, Poly(rx))));
  auto unbounded = std::make_shared<Algebroid>(rx, std::vector<std::string>{"e1"},
                                               std::move(anchor2), std::move(br2),
                                               WeightData{{0}, {0}});
  try {
    cohomology(CochainComplex(unbounded), 3);
    FAIL("expected WeightUnbounded");
  } catch (const Error& e) {
    CHECK(e.code() == "WeightUnbounded");
  }
}

TEST_CASE("dual differential examples") {
  // Abelian zero-anchor dual: d_* = 0.
  FixtureBundle sl2 = fixture("sl2");
  PolyRing ring = sl2.algebroid->ring();
  std::vector<Derivation> anchor(3, Derivation(ring));
  std::vector<std::vector<Section>> br(3, std::vector<Section>(3, Section(3, Poly(ring))));
  auto abelian = std::make_shared<Algebroid>(ring, std::vector<std::string>{"a", "b", "c"},
                                             std::move(anchor), std::move(br));
  Multivector x = Multivector::basis(sl2.algebroid, 0b011);
  CHECK(dual_differential(sl2.algebroid, abelian, x).is_zero());

  // Symplectic pair: d_* f = [pi, f] as multivectors.
  FixtureBundle bia = fixture("bialgebroid-symplectic");
  Rng rng(3);
  for (int iter = 0; iter < 40; ++iter) {
    Poly f = rng.poly(bia.algebroid->ring(), 2, 3);
    Multivector lhs =
        dual_differential(bia.algebroid, bia.dual, Multivector::scalar(bia.algebroid, f));
    Multivector rhs = sn_bracket(*bia.bivector, Multivector::scalar(bia.algebroid, f));
    CHECK(lhs == rhs);
  }

  // d_* o d_* = 0.
  for (int iter = 0; iter < 40; ++iter) {
    Multivector p = random_multivector(bia.algebroid, static_cast<int>(rng.range(0, 2)),
                                       rng);
    CHECK(dual_differential(bia.algebroid, bia.dual,
                            dual_differential(bia.algebroid, bia.dual, p))
              .is_zero());
  }
}

TEST_CASE("bialgebroid compatibility") {
  FixtureBundle bia = fixture("bialgebroid-symplectic");
  CHECK(check_bialgebroid(bia.algebroid, bia.dual, 100, 0).passed);
  // Swapped roles also pass on the symplectic pair.
  CHECK(check_bialgebroid(bia.dual, bia.algebroid, 100, 0).passed);

  // Zero-anchor abelian dual: d_* = 0 passes trivially against any primal.
  FixtureBundle sl2 = fixture("sl2");
  PolyRing ring = sl2.algebroid->ring();
  std::vector<Derivation> anchor(3, Derivation(ring));
  std::vector<std::vector<Section>> br(3, std::vector<Section>(3, Section(3, Poly(ring))));
  auto abelian = std::make_shared<Algebroid>(ring, std::vector<std::string>{"a", "b", "c"},
                                             std::move(anchor), std::move(br));
  CHECK(check_bialgebroid(sl2.algebroid, abelian, 50, 0).passed);

  // Rooted variant on the symplectic pair: phi = id, psi = the anchor of the
  // cotangent side viewed as a morphism into the tangent side.
  AlgebroidMorphism phi = AlgebroidMorphism::identity(bia.algebroid);
  std::vector<std::vector<Poly>> m(2, std::vector<Poly>(2, Poly(bia.algebroid->ring())));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m[j][i] = bia.dual->anchor(i).components()[j];
  AlgebroidMorphism psi(bia.dual, bia.algebroid, m);
  CHECK(check_bialgebroid(bia.algebroid, bia.dual, 50, 0, &phi, &psi).passed);
}

TEST_CASE("forced non-Poisson dual fails with a witness") {
  PolyRing r3 = PolyRing::create({"x", "y", "z"});
  AlgebroidPtr tangent = tangent_algebroid(r3);
  Multivector pi = Multivector::basis(tangent, 0b011).scaled(Poly::variable(r3, 1)) +
                   Multivector::basis(tangent, 0b110).scaled(Poly::variable(r3, 0));
  REQUIRE(!sn_bracket(pi, pi).is_zero());
  AlgebroidPtr forced = detail::cotangent_algebroid_unchecked(r3, pi);
  AxiomReport rep = check_bialgebroid(tangent, forced, 100, 0);
  CHECK(!rep.passed);
  CHECK(!rep.violations.empty());
}

TEST_CASE("dual cochain map") {
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism phi = fixture_morphism(logxy);
  CHECK(dual_cochain_map(phi, 100, 0).passed);
  CHECK(dual_cochain_map(AlgebroidMorphism::identity(logxy.algebroid), 100, 0).passed);

  // Pullback of the first dual generator along the inclusion is x eps1.
  Form dx = Form::basis(phi.target(), 0b01);
  CHECK(pullback_form(phi, dx) ==
        Form::basis(logxy.algebroid, 0b01).scaled(Poly::variable(logxy.algebroid->ring(), 0)));

  // Zero map out of a zero-anchor Lie algebra over the line.
  PolyRing rx = PolyRing::create({"x"});
  std::vector<Derivation> anchor(3, Derivation(rx));
  std::vector<std::vector<Section>> br(3, std::vector<Section>(3, Section(3, Poly(rx))));
  auto c = [&](long a, long b, long d) {
    return Section{Poly::constant(rx, a), Poly::constant(rx, b), Poly::constant(rx, d)};
  };
  br[0][1] = c(0, 0, 1);
  br[0][2] = c(-2, 0, 0);
  br[1][2] = c(0, 2, 0);
  auto sl2x = std::make_shared<Algebroid>(rx, std::vector<std::string>{"e", "f", "h"},
                                          std::move(anchor), std::move(br));
  AlgebroidMorphism zero(sl2x, tangent_algebroid(rx), {std::vector<Poly>(3, Poly(rx))});
  REQUIRE(check_morphism(zero).passed);
  CHECK(dual_cochain_map(zero, 50, 0).passed);

  // Functoriality through compositions.
  AlgebroidMorphism comp =
      AlgebroidMorphism::compose(AlgebroidMorphism::identity(phi.target()), phi);
  Rng rng(8);
  for (int iter = 0; iter < 40; ++iter) {
    Form w = random_form(phi.target(), static_cast<int>(rng.range(0, 2)), rng);
    CHECK(pullback_form(comp, w) ==
          pullback_form(phi, pullback_form(AlgebroidMorphism::identity(phi.target()), w)));
  }
}

TEST_CASE("twisted complexes reject non-flat coefficients") {
  AlgebroidPtr t2 = fixture("tangent-A2").algebroid;
  // Multipliers (y, 0): curvature -1 on (e1, e2).
  std::vector<std::vector<std::vector<Poly>>> mats{
      {{Poly::variable(t2->ring(), 1)}}, {{Poly(t2->ring())}}};
  Connection bad(t2, 1, std::move(mats), std::vector<int>{-2});
  try {
    CochainComplex c(t2, bad);
    FAIL("expected NonFlatCoefficients");
  } catch (const Error& e) {
    CHECK(e.code() == "NonFlatCoefficients");
  }
}

TEST_CASE("twisted d^2 = 0 on a rank-2 module") {
  // Flat connection on a rank-2 module over the affine line:
  // nabla_{d/dx} = d/dx + N with a constant nilpotent N. Module generator
  // weights (0, 1) make N weight-homogeneous.
  AlgebroidPtr t1 = fixture("tangent-A1").algebroid;
  const PolyRing& rx = t1->ring();
  std::vector<std::vector<std::vector<Poly>>> mats{
      {{Poly(rx), Poly::constant(rx, 1)}, {Poly(rx), Poly(rx)}}};
  Connection conn(t1, 2, std::move(mats), std::vector<int>{0, 1});
  CochainComplex complex(t1, conn);
  Rng rng(14);
  for (int iter = 0; iter < 30; ++iter) {
    std::map<IndexMask, std::vector<Poly>> comp;
    comp[0] = {rng.poly(rx), rng.poly(rx)};
    EForm f(t1, 2, std::move(comp));
    CHECK(complex.differential(complex.differential(f)).is_zero());
  }
  // Flat sections: v = c (x, -1) + d (1, 0) ... solving v0' + v1 = 0, v1' = 0
  // by hand gives one class in weight 0 and one in weight 1, and H^1 = 0.
  GradedDims dims = cohomology(complex, 4);
  for (long w = dims.min_weight; w <= 4; ++w) {
    CHECK(dims.dim(0, w) == ((w == 0 || w == 1) ? 1u : 0u));
    CHECK(dims.dim(1, w) == 0);
  }
}
