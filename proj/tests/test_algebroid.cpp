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

#include <algorithm>

#include "cecomplex.hpp"
#include "exterior.hpp"
#include "fixtures.hpp"
#include "rng.hpp"

using namespace algk;

namespace {

// sl2 with the bracket [e,f] tampered to e; Jacobi must fail on (e,f,h).
AlgebroidPtr tampered_sl2() {
  PolyRing ring = PolyRing::create({});
  std::vector<Derivation> anchor(3, Derivation(ring));
  std::vector<std::vector<Section>> br(3, std::vector<Section>(3, Section(3, Poly(ring))));
  auto c = [&](long a, long b, long d) {
    return Section{Poly::constant(ring, a), Poly::constant(ring, b),
                   Poly::constant(ring, d)};
  };
  br[0][1] = c(1, 0, 0);   // [e, f] = e   (tampered)
  br[0][2] = c(-2, 0, 0);  // [e, h] = -2e
  br[1][2] = c(0, 2, 0);   // [f, h] = 2f
  return std::make_shared<Algebroid>(ring, std::vector<std::string>{"e", "f", "h"},
                                     std::move(anchor), std::move(br));
}

// sl2 structure constants with zero anchor over a one-variable ring.
AlgebroidPtr sl2_over_ring(const PolyRing& ring) {
  std::vector<Derivation> anchor(3, Derivation(ring));
  std::vector<std::vector<Section>> br(3, std::vector<Section>(3, Section(3, Poly(ring))));
  auto c = [&](long a, long b, long d) {
    return Section{Poly::constant(ring, a), Poly::constant(ring, b),
                   Poly::constant(ring, d)};
  };
  br[0][1] = c(0, 0, 1);
  br[0][2] = c(-2, 0, 0);
  br[1][2] = c(0, 2, 0);
  return std::make_shared<Algebroid>(ring, std::vector<std::string>{"e", "f", "h"},
                                     std::move(anchor), std::move(br));
}

Section section_of(const AlgebroidPtr& alg, const std::vector<std::string>& exprs) {
  Section s;
  for (const auto& e : exprs) s.push_back(Poly::parse(alg->ring(), e));
  return s;
}

bool section_zero(const Section& s) {
  return std::all_of(s.begin(), s.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace

TEST_CASE("check_axioms on the classical fixtures") {
  CHECK(check_axioms(*fixture("sl2").algebroid).passed);
  CHECK(check_axioms(*fixture("tangent-A2").algebroid).passed);

  AxiomReport bad = check_axioms(*tampered_sl2());
  CHECK(!bad.passed);
  REQUIRE(!bad.violations.empty());
  CHECK(bad.violations.front().axiom == "jacobi");
  CHECK(bad.violations.front().witness == "(e,f,h)");
}

TEST_CASE("bracket_sections examples") {
  FixtureBundle t1 = fixture("tangent-A1");
  Section xdx = section_of(t1.algebroid, {"x"});
  Section dx = section_of(t1.algebroid, {"1"});
  Section out = bracket_sections(*t1.algebroid, xdx, dx);
  CHECK(out == section_of(t1.algebroid, {"-1"}));
  // Against the derivation-commutator oracle.
  Derivation oracle = Derivation::commutator(anchor_of_section(*t1.algebroid, xdx),
                                             anchor_of_section(*t1.algebroid, dx));
  CHECK(anchor_of_section(*t1.algebroid, out) == oracle);

  CHECK(section_zero(bracket_sections(*t1.algebroid, xdx, xdx)));

  FixtureBundle sl2 = fixture("sl2");
  Section e = sl2.algebroid->basis_section(0);
  Section f = sl2.algebroid->basis_section(1);
  CHECK(bracket_sections(*sl2.algebroid, e, f) == sl2.algebroid->basis_section(2));
}

TEST_CASE("bracket_sections antisymmetry and Jacobi on random sections") {
  for (const auto& name : {"tangent-A2", "sl2", "log-xy", "poisson-logx"}) {
    AlgebroidPtr alg = fixture(name).algebroid;
    Rng rng(42);
    const std::size_t n = alg->rank();
    auto rand_section = [&] {
      Section s(n, Poly(alg->ring()));
      for (auto& p : s) p = rng.poly(alg->ring(), 1, 2);
      return s;
    };
    for (int iter = 0; iter < 200; ++iter) {
      Section a = rand_section(), b = rand_section(), c = rand_section();
      Section ab = bracket_sections(*alg, a, b);
      Section ba = bracket_sections(*alg, b, a);
      for (std::size_t i = 0; i < n; ++i) CHECK((ab[i] + ba[i]).is_zero());
      Section t1 = bracket_sections(*alg, ab, c);
      Section t2 = bracket_sections(*alg, bracket_sections(*alg, b, c), a);
      Section t3 = bracket_sections(*alg, bracket_sections(*alg, c, a), b);
      for (std::size_t i = 0; i < n; ++i) CHECK((t1[i] + t2[i] + t3[i]).is_zero());
    }
  }
}

TEST_CASE("check_morphism examples") {
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism inclusion = fixture_morphism(logxy);
  CHECK(check_morphism(inclusion).passed);
  CHECK(check_morphism(AlgebroidMorphism::identity(logxy.algebroid)).passed);

  // Composition of passing morphisms passes.
  AlgebroidMorphism composed = AlgebroidMorphism::compose(
      AlgebroidMorphism::identity(inclusion.target()), inclusion);
  CHECK(check_morphism(composed).passed);

  // Zero map out of a zero-anchor Lie algebra passes; out of the tangent
  // algebroid it fails on anchor compatibility.
  PolyRing rx = PolyRing::create({"x"});
  AlgebroidPtr sl2x = sl2_over_ring(rx);
  AlgebroidPtr tx = tangent_algebroid(rx);
  std::vector<std::vector<Poly>> zero13(1, std::vector<Poly>(3, Poly(rx)));
  CHECK(check_morphism(AlgebroidMorphism(sl2x, tx, zero13)).passed);

  std::vector<std::vector<Poly>> zero11(1, std::vector<Poly>(1, Poly(rx)));
  AxiomReport bad = check_morphism(AlgebroidMorphism(tx, tx, zero11));
  CHECK(!bad.passed);
  CHECK(bad.violations.front().axiom == "anchor-compatibility");
}

TEST_CASE("log tangent fixtures") {
  PolyRing rxy = PolyRing::create({"x", "y"});
  AlgebroidPtr logxy = log_tangent_fixture(rxy, {0, 1});
  CHECK(logxy->rank() == 2);
  CHECK(check_axioms(*logxy).passed);
  CHECK(logxy->anchor(0).components()[0] == Poly::variable(rxy, 0));

  PolyRing rx = PolyRing::create({"x"});
  CHECK(log_tangent_fixture(rx, {0})->rank() == 1);

  AlgebroidPtr logx_on_a2 = log_tangent_fixture(rxy, {0});
  CHECK(logx_on_a2->basis_names() == std::vector<std::string>{"e1", "e2"});
  CHECK(logx_on_a2->anchor(1).components()[1] == Poly::constant(rxy, 1));
  CHECK(check_axioms(*logx_on_a2).passed);

  CHECK_THROWS_AS(log_tangent_fixture(rxy, {0, 0}), Error);
}

TEST_CASE("cotangent algebroid of a constant symplectic bivector") {
  PolyRing rxy = PolyRing::create({"x", "y"});
  AlgebroidPtr tangent = tangent_algebroid(rxy);
  Multivector pi = Multivector::basis(tangent, 0b11);
  AlgebroidPtr cot = cotangent_algebroid(rxy, pi);
  CHECK(check_axioms(*cot).passed);
  CHECK(section_zero(cot->bracket_basis(0, 1)));
  // The anchor matrix is an isomorphism onto the tangent algebroid.
  std::vector<std::vector<Poly>> m(2, std::vector<Poly>(2, Poly(rxy)));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m[j][i] = cot->anchor(i).components()[j];
  AlgebroidMorphism iso(cot, tangent, m);
  CHECK(check_morphism(iso).passed);
  CHECK(!iso.determinant().is_zero());
}

TEST_CASE("cotangent algebroid of x d/dx ^ d/dy") {
  PolyRing rxy = PolyRing::create({"x", "y"});
  AlgebroidPtr tangent = tangent_algebroid(rxy);
  Multivector pi = Multivector::basis(tangent, 0b11).scaled(Poly::variable(rxy, 0));
  AlgebroidPtr cot = cotangent_algebroid(rxy, pi);
  CHECK(check_axioms(*cot).passed);
  // [dx, dy] = dx with this orientation convention.
  CHECK(cot->bracket_basis(0, 1) == Section{Poly::constant(rxy, 1), Poly(rxy)});
  // Anchor: dx -> x d/dy, dy -> -x d/dx.
  CHECK(cot->anchor(0).components()[1] == Poly::variable(rxy, 0));
  CHECK(cot->anchor(1).components()[0] == -Poly::variable(rxy, 0));
}

TEST_CASE("cotangent algebroid of the zero bivector") {
  PolyRing rxy = PolyRing::create({"x", "y"});
  AlgebroidPtr cot = cotangent_algebroid(rxy, Multivector(tangent_algebroid(rxy)));
  CHECK(check_axioms(*cot).passed);
  for (std::size_t i = 0; i < 2; ++i) CHECK(cot->anchor(i).is_zero());
}

TEST_CASE("non-Poisson bivector is rejected with a witness") {
  PolyRing r3 = PolyRing::create({"x", "y", "z"});
  AlgebroidPtr tangent = tangent_algebroid(r3);
  // pi with {x,y} = y and {y,z} = x violates Jacobi.
  Multivector pi = Multivector::basis(tangent, 0b011).scaled(Poly::variable(r3, 1)) +
                   Multivector::basis(tangent, 0b110).scaled(Poly::variable(r3, 0));
  CHECK(!sn_bracket(pi, pi).is_zero());
  try {
    cotangent_algebroid(r3, pi);
    FAIL("expected NotPoisson");
  } catch (const Error& e) {
    CHECK(e.code() == "NotPoisson");
  }
}

TEST_CASE("random Poisson bivectors produce valid cotangent algebroids") {
  PolyRing rxy = PolyRing::create({"x", "y"});
  AlgebroidPtr t2 = tangent_algebroid(rxy);
  PolyRing r3 = PolyRing::create({"x", "y", "z"});
  AlgebroidPtr t3 = tangent_algebroid(r3);
  Rng rng(9);
  int built = 0;
  for (int iter = 0; iter < 40; ++iter) {
    // Rank 2: every bivector is Poisson.
    Multivector pi2 = Multivector::basis(t2, 0b11).scaled(rng.poly(rxy, 1, 2));
    CHECK(sn_bracket(pi2, pi2).is_zero());
    CHECK(check_axioms(*cotangent_algebroid(rxy, pi2)).passed);
    // Rank 3: filter by the Poisson condition.
    detail::ExtTable table;
    detail::table_add(table, 0b011, rng.poly(r3, 1, 1));
    detail::table_add(table, 0b101, rng.poly(r3, 1, 1));
    detail::table_add(table, 0b110, rng.poly(r3, 1, 1));
    Multivector pi3(t3, std::move(table));
    if (!sn_bracket(pi3, pi3).is_zero()) continue;
    ++built;
    CHECK(check_axioms(*cotangent_algebroid(r3, pi3)).passed);
  }
  CHECK(built > 5);
}

TEST_CASE("Gerstenhaber round trip recovers the structure data") {
  for (const auto& name : {"tangent-A1", "sl2", "log-xy", "poisson-logx"}) {
    FixtureBundle b = fixture(name);
    AlgebroidPtr back =
        algebroid_from_gerstenhaber(gerstenhaber_from_algebroid(b.algebroid));
    CHECK(back->structure_equals(*b.algebroid));
  }
}

TEST_CASE("every fixture passes check_axioms") {
  for (const auto& name : fixture_names()) {
    FixtureBundle b = fixture(name);
    CHECK(check_axioms(*b.algebroid).passed);
    if (b.dual) CHECK(check_axioms(*b.dual).passed);
  }
}

TEST_CASE("weight homogeneity violations are reported") {
  PolyRing rx = PolyRing::create({"x"});
  // Tangent d/dx declared weight 0 instead of -1: the anchor entry would
  // have to be homogeneous of weight 1, but it is the constant 1.
  std::vector<Derivation> anchor{Derivation::coordinate(rx, 0)};
  std::vector<std::vector<Section>> br(1, std::vector<Section>(1, Section(1, Poly(rx))));
  Algebroid bad(rx, {"e1"}, std::move(anchor), std::move(br), WeightData{{1}, {0}});
  AxiomReport rep = check_axioms(bad);
  CHECK(!rep.passed);
  CHECK(rep.violations.front().axiom == "weight-homogeneity");
}
