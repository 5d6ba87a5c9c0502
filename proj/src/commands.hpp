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
#ifndef ALGK_COMMANDS_HPP
#define ALGK_COMMANDS_HPP

#include <json.hpp>

#include "specfile.hpp"

namespace algk {

struct CmdOptions {
  std::uint64_t seed = 0;
  int samples = 100;
  int max_degree = 3;
  long max_weight = 6;
  bool twisted = false;
};

// status: 0 all checks passed, 1 violation or math-level error reported,
// 2 parse/usage error. The report is the versioned JSON document.
struct CmdResult {
  int status = 0;
  nlohmann::json report;
};

CmdResult cmd_check(const FixtureBundle& spec, const CmdOptions& opts,
                    const FileLoader& loader = {});
CmdResult cmd_cohomology(const FixtureBundle& spec, const CmdOptions& opts);
CmdResult cmd_homology(const FixtureBundle& spec, const CmdOptions& opts);
CmdResult cmd_duality(const FixtureBundle& spec, const FixtureBundle* morphism_spec,
                      const CmdOptions& opts, const FileLoader& loader = {});
CmdResult cmd_bv_verify(const FixtureBundle& spec, const CmdOptions& opts);
CmdResult cmd_bialgebroid(const FixtureBundle& spec, const CmdOptions& opts);
CmdResult cmd_pbw(const FixtureBundle& spec, const std::string& expr,
                  const CmdOptions& opts);
CmdResult cmd_morphism_check(const FixtureBundle& spec, const CmdOptions& opts,
                             const FileLoader& loader = {});
CmdResult cmd_cotangent(const FixtureBundle& spec, const CmdOptions& opts);
CmdResult cmd_fixture_list();
CmdResult cmd_fixture_emit(const std::string& name);

// Uniform error document (status 1 for math-level errors, 2 for parse and
// usage errors).
CmdResult error_result(const std::string& command, const Error& e, std::uint64_t seed);

nlohmann::json axiom_report_json(const AxiomReport& rep);

}  // namespace algk

#endif
