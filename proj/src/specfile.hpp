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
#ifndef ALGK_SPECFILE_HPP
#define ALGK_SPECFILE_HPP

#include <functional>

#include "fixtures.hpp"

namespace algk {

// Line-oriented sectioned text format for algebroid bundles:
// `[section]` headers and `key = value` entries. Sections: ring, weights,
// algebroid, anchor, bracket, connection, morphism, dual, dual_anchor,
// dual_bracket, bivector. Anchor/bracket values are comma-separated
// polynomial expressions; morphism matrices are row-major flat lists;
// bracket keys are "ei,ej" with i < j.

// Resolves `target = <fixture>` via the built-in fixtures and
// `target = file:<path>` through the supplied loader (which receives the
// path and returns the file text).
using FileLoader = std::function<std::string(const std::string&)>;

FixtureBundle parse_spec(const std::string& text, const FileLoader& loader = {});

std::string emit_spec(const FixtureBundle& bundle);

// Morphism of a parsed bundle resolved against its declared target.
AlgebroidMorphism spec_morphism(const FixtureBundle& bundle, const FileLoader& loader = {});

}  // namespace algk

#endif
