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
#ifndef ALGK_FIXTURES_HPP
#define ALGK_FIXTURES_HPP

#include <optional>
#include <string>

#include "connection.hpp"
#include "exterior.hpp"

namespace algk {

// Canonical example data bundled with the library. Every fixture passes the
// full axiom matrix; the spec files shipped under fixtures/ are emitted
// byte-identically from these constructors.
struct FixtureBundle {
  std::string name;
  AlgebroidPtr algebroid;
  std::optional<Connection> top_connection;  // flat, on the top power
  std::optional<std::string> morphism_target;
  std::optional<std::vector<std::vector<Poly>>> morphism_matrix;
  AlgebroidPtr dual;                      // bialgebroid fixtures only
  std::optional<Multivector> bivector;    // Poisson fixtures: pi over the tangent
};

const std::vector<std::string>& fixture_names();
FixtureBundle fixture(const std::string& name);  // throws UnknownFixture

// The rooted morphism of a fixture, resolved against its named target.
AlgebroidMorphism fixture_morphism(const FixtureBundle& bundle);

}  // namespace algk

#endif
