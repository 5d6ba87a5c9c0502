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

#include "cecomplex.hpp"
#include "exterior.hpp"
#include "fixtures.hpp"
#include "rng.hpp"

using namespace algk;

TEST_CASE("wedge basics") {
  AlgebroidPtr t2 = fixture("tangent-A2").algebroid;
  Multivector e1 = Multivector::basis(t2, 0b01);
  Multivector e2 = Multivector::basis(t2, 0b10);
  CHECK(wedge(e1, e2) == Multivector::basis(t2, 0b11));
  CHECK(wedge(e2, e1) == Multivector::basis(t2, 0b11).scaled(Rational(-1)));
  Poly x = Poly::variable(t2->ring(), 0);
  Multivector mixed = e1.scaled(x) + e2;
  CHECK(wedge(mixed, e2) == Multivector::basis(t2, 0b11).scaled(x));
}

TEST_CASE("sn_bracket examples") {
  AlgebroidPtr t1 = fixture("tangent-A1").algebroid;
  Poly x = Poly::variable(t1->ring(), 0);
  // [d/dx, x] = 1
  Multivector b = sn_bracket(Multivector::basis(t1, 0b1), Multivector::scalar(t1, x));
  CHECK(b == Multivector::scalar(t1, Poly::constant(t1->ring(), 1)));

  AlgebroidPtr sl2 = fixture("sl2").algebroid;
  CHECK(sn_bracket(Multivector::basis(sl2, 0b001), Multivector::basis(sl2, 0b001))
            .is_zero());

  AlgebroidPtr t2 = fixture("tangent-A2").algebroid;
  Multivector pi = Multivector::basis(t2, 0b11);
  CHECK(sn_bracket(pi, pi).is_zero());
}

TEST_CASE("sn_bracket restricted to low degrees matches the algebroid data") {
  for (const auto& name : {"tangent-A2", "sl2", "log-xy", "poisson-logx"}) {
    AlgebroidPtr alg = fixture(name).algebroid;
    const std::size_t n = alg->rank();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Multivector lhs = sn_bracket(Multivector::basis(alg, IndexMask(1) << i),
                                     Multivector::basis(alg, IndexMask(1) << j));
        CHECK(lhs == Multivector::from_section(alg, alg->bracket_basis(i, j)));
      }
      for (std::size_t v = 0; v < alg->ring().var_count(); ++v) {
        Poly xv = Poly::variable(alg->ring(), v);
        Multivector lhs = sn_bracket(Multivector::basis(alg, IndexMask(1) << i),
                                     Multivector::scalar(alg, xv));
        CHECK(lhs == Multivector::scalar(alg, alg->anchor(i).apply(xv)));
      }
    }
  }
}

TEST_CASE("pairing and contraction") {
  AlgebroidPtr t2 = fixture("tangent-A2").algebroid;
  Form eps12 = Form::basis(t2, 0b11);
  CHECK(pairing(eps12, Multivector::basis(t2, 0b11)) ==
        Poly::constant(t2->ring(), 1));
  // e2 ^ e1 normalizes to -e12.
  Multivector e21 = wedge(Multivector::basis(t2, 0b10), Multivector::basis(t2, 0b01));
  CHECK(pairing(eps12, e21) == Poly::constant(t2->ring(), -1));
  CHECK(contract(eps12, Multivector::basis(t2, 0b01)) == Form::basis(t2, 0b10));
  CHECK_THROWS_AS(pairing(Form::basis(t2, 0b01), Multivector::basis(t2, 0b11)), Error);
}

TEST_CASE("lie_derivative examples") {
  FixtureBundle t1 = fixture("tangent-A1");
  const PolyRing& rx = t1.algebroid->ring();
  Poly x = Poly::variable(rx, 0);
  Section ddx{Poly::constant(rx, 1)};
  Form xeps = Form::basis(t1.algebroid, 0b1).scaled(x);
  CHECK(lie_derivative(ddx, xeps) == Form::basis(t1.algebroid, 0b1));

  Section xddx{x};
  CHECK(lie_derivative(xddx, Form::scalar(t1.algebroid, x)) ==
        Form::scalar(t1.algebroid, x));

  // Derivation property on random pairs over a rank-3 fixture.
  AlgebroidPtr cot = fixture("poisson-logx").algebroid;
  Rng rng(12);
  for (int iter = 0; iter < 60; ++iter) {
    Section d(cot->rank(), Poly(cot->ring()));
    for (auto& p : d) p = rng.poly(cot->ring(), 1, 2);
    Form a = random_form(cot, static_cast<int>(rng.range(0, 1)), rng);
    Form b = random_form(cot, static_cast<int>(rng.range(0, 1)), rng);
    Form lhs = lie_derivative(d, wedge(a, b));
    Form rhs = wedge(lie_derivative(d, a), b) + wedge(a, lie_derivative(d, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lie_derivative respects the bracket") {
  for (const auto& name : {"tangent-A2", "log-xy", "poisson-symplectic"}) {
    AlgebroidPtr alg = fixture(name).algebroid;
    Rng rng(21);
    for (int iter = 0; iter < 40; ++iter) {
      Section d1(alg->rank(), Poly(alg->ring()));
      Section d2(alg->rank(), Poly(alg->ring()));
      for (auto& p : d1) p = rng.poly(alg->ring(), 1, 2);
      for (auto& p : d2) p = rng.poly(alg->ring(), 1, 2);
      Form w = random_form(alg, static_cast<int>(rng.range(0, 2)), rng);
      Form lhs = lie_derivative(bracket_sections(*alg, d1, d2), w);
      Form rhs = lie_derivative(d1, lie_derivative(d2, w)) -
                 lie_derivative(d2, lie_derivative(d1, w));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("check_gerstenhaber passes on fixtures") {
  CHECK(check_gerstenhaber(fixture("tangent-A2").algebroid, 2, 100, 0).passed);
  CHECK(check_gerstenhaber(fixture("sl2").algebroid, 3, 100, 0).passed);
  CHECK(check_gerstenhaber(fixture("poisson-logx").algebroid, 2, 100, 0).passed);
}

TEST_CASE("check_gerstenhaber catches broken structure data") {
  // Jacobi-violating structure constants: the graded Jacobi identity on the
  // exterior algebra must fail.
  PolyRing ring = PolyRing::create({});
  std::vector<Derivation> anchor(3, Derivation(ring));
  std::vector<std::vector<Section>> br(3, std::vector<Section>(3, Section(3, Poly(ring))));
  auto c = [&](long a, long b, long d) {
    return Section{Poly::constant(ring, a), Poly::constant(ring, b),
                   Poly::constant(ring, d)};
  };
  br[0][1] = c(1, 0, 0);
  br[0][2] = c(-2, 0, 0);
  br[1][2] = c(0, 2, 0);
  auto bad = std::make_shared<Algebroid>(ring, std::vector<std::string>{"e", "f", "h"},
                                         std::move(anchor), std::move(br));
  AxiomReport rep = check_gerstenhaber(bad, 3, 200, 0);
  CHECK(!rep.passed);
  bool has_jacobi = false;
  for (const auto& v : rep.violations) has_jacobi |= v.axiom == "sn-graded-jacobi";
  CHECK(has_jacobi);
}

TEST_CASE("a wrong-sign bracket variant fails the axiom suite") {
  // Flip the sign of the degree-0 convention: [P, f] gains a global -1.
  // The compatibility [D, f ^ D'] = [D,f] ^ D' + f [D,D'] then breaks.
  AlgebroidPtr t1 = fixture("tangent-A1").algebroid;
  auto wrong_bracket = [&](const Multivector& p, const Multivector& q) {
    auto flip = [](const Multivector& m, int deg_other) {
      return deg_other == 0 ? m.scaled(Rational(-1)) : m;
    };
    return flip(sn_bracket(p, q), q.degree().value_or(1));
  };
  Poly x = Poly::variable(t1->ring(), 0);
  Multivector d = Multivector::basis(t1, 0b1);
  Multivector fd = d.scaled(x);
  Multivector lhs = wrong_bracket(d, fd);
  Multivector rhs = wedge(wrong_bracket(d, Multivector::scalar(t1, x)), d) +
                    wrong_bracket(d, d).scaled(x);
  CHECK(!(lhs == rhs));
}

TEST_CASE("morphism wedge extension") {
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism phi = fixture_morphism(logxy);
  CHECK(gerstenhaber_morphism_check(phi, 2, 100, 0).passed);
  CHECK(gerstenhaber_morphism_check(AlgebroidMorphism::identity(logxy.algebroid), 2, 50, 0)
            .passed);

  // Functoriality of the wedge extension under composition.
  AlgebroidMorphism id_t = AlgebroidMorphism::identity(phi.target());
  AlgebroidMorphism comp = AlgebroidMorphism::compose(id_t, phi);
  Rng rng(77);
  for (int iter = 0; iter < 50; ++iter) {
    Multivector p = random_multivector(logxy.algebroid, static_cast<int>(rng.range(0, 2)),
                                       rng);
    CHECK(apply_morphism(comp, p) == apply_morphism(id_t, apply_morphism(phi, p)));
  }
}

TEST_CASE("zero morphism into the tangent target is a Gerstenhaber map") {
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
  AlgebroidPtr tx = tangent_algebroid(rx);
  AlgebroidMorphism zero(sl2x, tx, {std::vector<Poly>(3, Poly(rx))});
  REQUIRE(check_morphism(zero).passed);
  CHECK(gerstenhaber_morphism_check(zero, 3, 50, 0).passed);
}
