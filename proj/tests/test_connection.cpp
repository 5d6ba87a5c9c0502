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

#include "connection.hpp"
#include "fixtures.hpp"
#include "rng.hpp"

using namespace algk;

namespace {

Connection rank1_connection(const AlgebroidPtr& alg, const std::vector<Poly>& g) {
  std::vector<std::vector<std::vector<Poly>>> mats;
  for (const auto& gi : g) mats.push_back({{gi}});
  return Connection(alg, 1, std::move(mats));
}

}  // namespace

TEST_CASE("curvature examples") {
  AlgebroidPtr t2 = fixture("tangent-A2").algebroid;
  const PolyRing& rxy = t2->ring();

  Connection trivial = trivial_top_connection(t2);
  CHECK(curvature(trivial, 0, 1).is_zero());
  CHECK(check_flat(trivial).passed);

  AlgebroidPtr logxy = fixture("log-xy").algebroid;
  Connection logconn =
      rank1_connection(logxy, {Poly::constant(rxy, 1), Poly(rxy)});
  CHECK(curvature(logconn, 0, 1).is_zero());
  CHECK(check_flat(logconn).passed);

  // Multipliers (y, 0) over the plane: [nabla_1, nabla_2] = -1, so the
  // curvature nabla_[e1,e2] - [nabla_1, nabla_2] is +1.
  Connection bad = rank1_connection(t2, {Poly::variable(rxy, 1), Poly(rxy)});
  AtiyahOperator r = curvature(bad, 0, 1);
  CHECK(r.symbol().is_zero());
  CHECK(r.matrix()[0][0] == Poly::constant(rxy, 1));
  CHECK(!check_flat(bad).passed);
}

TEST_CASE("symbols agree with the anchor by construction") {
  for (const auto& name : fixture_names()) {
    FixtureBundle b = fixture(name);
    if (!b.top_connection) continue;
    for (std::size_t i = 0; i < b.algebroid->rank(); ++i)
      CHECK(b.top_connection->op(i).symbol() == b.algebroid->anchor(i));
  }
}

TEST_CASE("curvature is A-bilinear and antisymmetric") {
  AlgebroidPtr logxy = fixture("log-xy").algebroid;
  Connection conn = *fixture("log-xy").top_connection;
  Rng rng(19);
  for (int iter = 0; iter < 50; ++iter) {
    Section d1(2, Poly(logxy->ring())), d2(2, Poly(logxy->ring()));
    for (auto& p : d1) p = rng.poly(logxy->ring(), 1, 2);
    for (auto& p : d2) p = rng.poly(logxy->ring(), 1, 2);
    Poly f = rng.poly(logxy->ring(), 1, 2);
    auto r_of = [&](const Section& a, const Section& b) {
      AtiyahOperator lhs = conn.op_for_section(bracket_sections(*logxy, a, b));
      return lhs - AtiyahOperator::commutator(conn.op_for_section(a),
                                              conn.op_for_section(b));
    };
    Section fd2 = d2;
    for (auto& p : fd2) p = p * f;
    // R(D, f D') = f R(D, D'); and R is antisymmetric.
    CHECK((r_of(d1, fd2) - r_of(d1, d2).scaled(f)).is_zero());
    CHECK((r_of(d1, d2) + r_of(d2, d1)).is_zero());
  }
}

TEST_CASE("compose_connection") {
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism phi = fixture_morphism(logxy);
  Connection target_trivial = trivial_top_connection(phi.target());

  // Through the identity the connection is unchanged.
  Connection same =
      compose_connection(target_trivial, AlgebroidMorphism::identity(phi.target()));
  for (std::size_t i = 0; i < phi.target()->rank(); ++i) {
    CHECK(same.op(i).matrix() == target_trivial.op(i).matrix());
    CHECK(same.op(i).symbol() == target_trivial.op(i).symbol());
  }

  // Pullback of a flat connection along a morphism stays flat. The matrix
  // part vanishes; the symbols become the log vector fields.
  Connection pulled = compose_connection(target_trivial, phi);
  CHECK(check_flat(pulled).passed);
  CHECK(pulled.op(0).symbol() == logxy.algebroid->anchor(0));

  // Pullback of a non-flat connection keeps its curvature witness.
  const PolyRing& rxy = phi.target()->ring();
  Connection bad = rank1_connection(phi.target(), {Poly::variable(rxy, 1), Poly(rxy)});
  Connection pulled_bad = compose_connection(bad, phi);
  CHECK(!check_flat(pulled_bad).passed);
}

TEST_CASE("flatness is preserved by composition across fixtures") {
  for (const auto& name : {"log-x", "log-xy"}) {
    FixtureBundle b = fixture(name);
    AlgebroidMorphism phi = fixture_morphism(b);
    FixtureBundle target = fixture(*b.morphism_target);
    REQUIRE(target.top_connection);
    CHECK(check_flat(compose_connection(*target.top_connection, phi)).passed);
  }
}

TEST_CASE("induced top connection on the log inclusions") {
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism phi = fixture_morphism(logxy);
  InducedTopResult res =
      induced_top_connection(trivial_top_connection(phi.target()), phi);
  REQUIRE(res.connection);
  const PolyRing& rxy = logxy.algebroid->ring();
  CHECK(res.det == Poly::variable(rxy, 0) * Poly::variable(rxy, 1));
  CHECK(res.connection->op(0).matrix()[0][0] == Poly::constant(rxy, 1));
  CHECK(res.connection->op(1).matrix()[0][0] == Poly::constant(rxy, 1));
  CHECK(check_flat(*res.connection).passed);

  // Identity: h = 1 and the connection comes back unchanged.
  AlgebroidPtr t2 = phi.target();
  InducedTopResult same = induced_top_connection(
      trivial_top_connection(t2), AlgebroidMorphism::identity(t2));
  REQUIRE(same.connection);
  CHECK(same.det == Poly::constant(t2->ring(), 1));
  for (std::size_t i = 0; i < t2->rank(); ++i)
    CHECK(same.connection->op(i).matrix()[0][0].is_zero());

  FixtureBundle logx = fixture("log-x");
  AlgebroidMorphism incl = fixture_morphism(logx);
  InducedTopResult r1 = induced_top_connection(trivial_top_connection(incl.target()), incl);
  REQUIRE(r1.connection);
  CHECK(r1.connection->op(0).matrix()[0][0] ==
        Poly::constant(logx.algebroid->ring(), 1));
}

TEST_CASE("induced top connection obstruction witness") {
  // Synthetic data exercising the divisibility failure: the target has two
  // generators with the same anchor d/dx, the claimed inclusion rescales
  // only the first one. The morphism is deliberately not validated.
  PolyRing rx = PolyRing::create({"x"});
  std::vector<Derivation> anchor{Derivation::coordinate(rx, 0),
                                 Derivation::coordinate(rx, 0)};
  std::vector<std::vector<Section>> br(2, std::vector<Section>(2, Section(2, Poly(rx))));
  auto target = std::make_shared<Algebroid>(rx, std::vector<std::string>{"E1", "E2"},
                                            std::move(anchor), std::move(br));
  std::vector<Derivation> anchor2{Derivation::coordinate(rx, 0).scaled(Poly::variable(rx, 0)),
                                  Derivation::coordinate(rx, 0)};
  std::vector<std::vector<Section>> br2(2, std::vector<Section>(2, Section(2, Poly(rx))));
  auto source = std::make_shared<Algebroid>(rx, std::vector<std::string>{"F1", "F2"},
                                            std::move(anchor2), std::move(br2));
  std::vector<std::vector<Poly>> m{{Poly::variable(rx, 0), Poly(rx)},
                                   {Poly(rx), Poly::constant(rx, 1)}};
  AlgebroidMorphism phi(source, target, m);
  InducedTopResult res = induced_top_connection(trivial_top_connection(target), phi);
  CHECK(!res.connection);
  REQUIRE(res.obstruction);
  CHECK(res.obstruction->first == 1);
  CHECK(res.obstruction->second == Poly::constant(rx, 1));  // d/dx(x) = 1, not in (x)
}

TEST_CASE("induced operator law") {
  // theta(nabla'_{D'}(s')) = nabla_{phi(D')}(theta(s')) with theta = det.
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism phi = fixture_morphism(logxy);
  Connection top = trivial_top_connection(phi.target());
  InducedTopResult res = induced_top_connection(top, phi);
  REQUIRE(res.connection);
  Rng rng(4);
  const PolyRing& rxy = logxy.algebroid->ring();
  for (int iter = 0; iter < 60; ++iter) {
    Section d(2, Poly(rxy));
    for (auto& p : d) p = rng.poly(rxy, 1, 2);
    Poly s = rng.poly(rxy, 2, 3);
    Poly lhs = res.det * res.connection->op_for_section(d).apply({s})[0];
    Poly rhs = top.op_for_section(phi.apply(d)).apply({res.det * s})[0];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("induced top connection input validation") {
  FixtureBundle logxy = fixture("log-xy");
  AlgebroidMorphism phi = fixture_morphism(logxy);
  const PolyRing& rxy = phi.target()->ring();

  // Zero determinant.
  std::vector<std::vector<Poly>> zero(2, std::vector<Poly>(2, Poly(rxy)));
  AlgebroidMorphism degenerate(logxy.algebroid, phi.target(), zero);
  CHECK_THROWS_AS(
      induced_top_connection(trivial_top_connection(phi.target()), degenerate), Error);

  // Non-flat input connection.
  std::vector<std::vector<std::vector<Poly>>> mats{{{Poly::variable(rxy, 1)}},
                                                   {{Poly(rxy)}}};
  Connection bad(phi.target(), 1, std::move(mats));
  CHECK_THROWS_AS(induced_top_connection(bad, phi), Error);
}
