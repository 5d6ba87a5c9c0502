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
#include "fixtures.hpp"

#include <numeric>

namespace algk {

namespace {

AlgebroidPtr with_weights(const AlgebroidPtr& alg, WeightData w) {
  const std::size_t n = alg->rank();
  std::vector<Derivation> anchor;
  for (std::size_t i = 0; i < n; ++i) anchor.push_back(alg->anchor(i));
  std::vector<std::vector<Section>> bracket(n, std::vector<Section>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bracket[i][j] = alg->bracket_basis(i, j);
  return std::make_shared<Algebroid>(alg->ring(), alg->basis_names(), std::move(anchor),
                                     std::move(bracket), std::move(w));
}

Connection top_connection_with_multipliers(const AlgebroidPtr& alg,
                                           const std::vector<Poly>& g) {
  std::vector<std::vector<std::vector<Poly>>> mats;
  for (const auto& gi : g) mats.push_back({{gi}});
  std::optional<std::vector<int>> mw;
  if (alg->weights()) {
    int total = std::accumulate(alg->weights()->basis_weights.begin(),
                                alg->weights()->basis_weights.end(), 0);
    mw = std::vector<int>{total};
  }
  return Connection(alg, 1, std::move(mats), std::move(mw));
}

Multivector constant_symplectic_bivector(const AlgebroidPtr& tangent) {
  // pi = d/dx ^ d/dy
  return Multivector::basis(tangent, 0b11);
}

FixtureBundle make_tangent(const std::string& name, std::vector<std::string> vars) {
  FixtureBundle b;
  b.name = name;
  b.algebroid = tangent_algebroid(PolyRing::create(std::move(vars)));
  b.top_connection = trivial_top_connection(b.algebroid);
  return b;
}

FixtureBundle make_log(const std::string& name, std::vector<std::string> vars,
                       std::vector<std::size_t> log_vars, const std::string& target) {
  FixtureBundle b;
  b.name = name;
  PolyRing ring = PolyRing::create(std::move(vars));
  b.algebroid = log_tangent_fixture(ring, log_vars);
  const std::size_t n = b.algebroid->rank();
  // Induced multipliers along the inclusion into the tangent algebroid:
  // 1 on the logarithmic generators, 0 on the plain ones.
  std::vector<Poly> g;
  for (std::size_t i = 0; i < n; ++i)
    g.push_back(i < log_vars.size() ? Poly::constant(ring, 1) : Poly(ring));
  b.top_connection = top_connection_with_multipliers(b.algebroid, g);
  b.morphism_target = target;
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    const Derivation& a = b.algebroid->anchor(i);
    for (std::size_t j = 0; j < n; ++j) m[j][i] = a.components()[j];
  }
  b.morphism_matrix = std::move(m);
  return b;
}

FixtureBundle make_sl2() {
  FixtureBundle b;
  b.name = "sl2";
  PolyRing ring = PolyRing::create({});
  const std::size_t n = 3;
  std::vector<std::string> names{"e", "f", "h"};
  std::vector<Derivation> anchor(n, Derivation(ring));
  std::vector<std::vector<Section>> bracket(n, std::vector<Section>(n, Section(n, Poly(ring))));
  auto c = [&](long e, long f, long h) {
    return Section{Poly::constant(ring, e), Poly::constant(ring, f),
                   Poly::constant(ring, h)};
  };
  bracket[0][1] = c(0, 0, 1);    // [e, f] = h
  bracket[0][2] = c(-2, 0, 0);   // [e, h] = -2e
  bracket[1][2] = c(0, 2, 0);    // [f, h] = 2f
  WeightData w{{}, {0, 0, 0}};
  b.algebroid = std::make_shared<Algebroid>(ring, std::move(names), std::move(anchor),
                                            std::move(bracket), std::move(w));
  b.top_connection = trivial_top_connection(b.algebroid);
  return b;
}

FixtureBundle make_poisson(const std::string& name, bool log_variant) {
  FixtureBundle b;
  b.name = name;
  PolyRing ring = PolyRing::create({"x", "y"});
  AlgebroidPtr tangent = tangent_algebroid(ring);
  Multivector pi = constant_symplectic_bivector(tangent);
  if (log_variant) pi = pi.scaled(Poly::variable(ring, 0));  // x d/dx ^ d/dy
  AlgebroidPtr cot = cotangent_algebroid(ring, pi);
  int bw = log_variant ? 0 : -1;
  b.algebroid = with_weights(cot, WeightData{{1, 1}, {bw, bw}});
  b.top_connection = trivial_top_connection(b.algebroid);
  b.bivector = pi;
  return b;
}

FixtureBundle make_bialgebroid_symplectic() {
  FixtureBundle b = make_tangent("bialgebroid-symplectic", {"x", "y"});
  b.name = "bialgebroid-symplectic";
  AlgebroidPtr tangent = b.algebroid;
  Multivector pi = constant_symplectic_bivector(tangent);
  AlgebroidPtr cot = cotangent_algebroid(tangent->ring(), pi);
  b.dual = with_weights(cot, WeightData{{1, 1}, {-1, -1}});
  b.bivector = pi;
  return b;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "tangent-A1",         "tangent-A2", "log-x",        "log-xy",
      "sl2",                "poisson-symplectic", "poisson-logx",
      "bialgebroid-symplectic"};
  return names;
}

FixtureBundle fixture(const std::string& name) {
  if (name == "tangent-A1") return make_tangent(name, {"x"});
  if (name == "tangent-A2") return make_tangent(name, {"x", "y"});
  if (name == "log-x") return make_log(name, {"x"}, {0}, "tangent-A1");
  if (name == "log-xy") return make_log(name, {"x", "y"}, {0, 1}, "tangent-A2");
  if (name == "sl2") return make_sl2();
  if (name == "poisson-symplectic") return make_poisson(name, false);
  if (name == "poisson-logx") return make_poisson(name, true);
  if (name == "bialgebroid-symplectic") return make_bialgebroid_symplectic();
  throw Error("UnknownFixture", "no fixture named '" + name + "'");
}

AlgebroidMorphism fixture_morphism(const FixtureBundle& bundle) {
  if (!bundle.morphism_target || !bundle.morphism_matrix)
    throw Error("SemanticError", "fixture '" + bundle.name + "' has no morphism");
  FixtureBundle target = fixture(*bundle.morphism_target);
  return AlgebroidMorphism(bundle.algebroid, target.algebroid, *bundle.morphism_matrix);
}

}  // namespace algk
