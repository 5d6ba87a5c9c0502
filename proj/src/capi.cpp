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
#include "algebroidkit.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

using namespace algk;

struct ak_session {
  FixtureBundle bundle;
  FileLoader loader;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("ParseError", "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FileLoader loader_for_dir(const std::filesystem::path& dir) {
  return [dir](const std::string& rel) {
    std::filesystem::path p(rel);
    if (p.is_relative()) p = dir / p;
    return read_file(p.string());
  };
}

int emit(const CmdResult& result, char** report_json) {
  if (report_json) *report_json = dup_string(result.report.dump(2) + "\n");
  return result.status;
}

template <typename Fn>
int run(const char* command, uint64_t seed, char** report_json, Fn&& fn) {
  try {
    return emit(fn(), report_json);
  } catch (const Error& e) {
    return emit(error_result(command, e, seed), report_json);
  } catch (const std::exception& e) {
    return emit(error_result(command, Error("InternalError", e.what()), seed),
                report_json);
  }
}

ak_session* open_with(char** err, const std::function<ak_session*()>& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (err) *err = dup_string(std::string(e.what()));
    return nullptr;
  } catch (const std::exception& e) {
    if (err) *err = dup_string(std::string("InternalError: ") + e.what());
    return nullptr;
  }
}

}  // namespace

extern "C" {

const char* ak_version(void) { return "algebroid-kit 1.0.0"; }

void ak_free(char* buf) { std::free(buf); }

ak_session* ak_open_text(const char* text, char** err) {
  return open_with(err, [&] {
    auto loader = loader_for_dir(std::filesystem::current_path());
    return new ak_session{parse_spec(text ? text : "", loader), loader};
  });
}

ak_session* ak_open_file(const char* path, char** err) {
  return open_with(err, [&] {
    std::filesystem::path p(path ? path : "");
    auto loader = loader_for_dir(p.has_parent_path() ? p.parent_path()
                                                     : std::filesystem::path("."));
    return new ak_session{parse_spec(read_file(p.string()), loader), loader};
  });
}

ak_session* ak_open_fixture(const char* name, char** err) {
  return open_with(err, [&] {
    return new ak_session{fixture(name ? name : ""), FileLoader{}};
  });
}

void ak_close(ak_session* s) { delete s; }

int ak_check(ak_session* s, uint64_t seed, int samples, char** report_json) {
  return run("check", seed, report_json, [&] {
    CmdOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    return cmd_check(s->bundle, opts, s->loader);
  });
}

int ak_cohomology(ak_session* s, long max_weight, int twisted, char** report_json) {
  return run("cohomology", 0, report_json, [&] {
    CmdOptions opts;
    opts.max_weight = max_weight;
    opts.twisted = twisted != 0;
    return cmd_cohomology(s->bundle, opts);
  });
}

int ak_homology(ak_session* s, long max_weight, char** report_json) {
  return run("homology", 0, report_json, [&] {
    CmdOptions opts;
    opts.max_weight = max_weight;
    return cmd_homology(s->bundle, opts);
  });
}

int ak_duality(ak_session* s, ak_session* morphism_or_null, long max_weight,
               char** report_json) {
  return run("duality", 0, report_json, [&] {
    CmdOptions opts;
    opts.max_weight = max_weight;
    return cmd_duality(s->bundle, morphism_or_null ? &morphism_or_null->bundle : nullptr,
                       opts, morphism_or_null ? morphism_or_null->loader : s->loader);
  });
}

int ak_bv_verify(ak_session* s, uint64_t seed, int samples, char** report_json) {
  return run("bv-verify", seed, report_json, [&] {
    CmdOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    return cmd_bv_verify(s->bundle, opts);
  });
}

int ak_bialgebroid(ak_session* s, uint64_t seed, int samples, char** report_json) {
  return run("bialgebroid", seed, report_json, [&] {
    CmdOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    return cmd_bialgebroid(s->bundle, opts);
  });
}

int ak_pbw(ak_session* s, const char* expr, char** report_json) {
  return run("pbw", 0, report_json, [&] {
    return cmd_pbw(s->bundle, expr ? expr : "", CmdOptions{});
  });
}

int ak_morphism_check(ak_session* s, uint64_t seed, int samples, int max_degree,
                      char** report_json) {
  return run("morphism-check", seed, report_json, [&] {
    CmdOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    opts.max_degree = max_degree;
    return cmd_morphism_check(s->bundle, opts, s->loader);
  });
}

int ak_cotangent(ak_session* s, uint64_t seed, char** report_json) {
  return run("cotangent", seed, report_json, [&] {
    CmdOptions opts;
    opts.seed = seed;
    return cmd_cotangent(s->bundle, opts);
  });
}

int ak_fixture_list(char** report_json) {
  return run("fixtures", 0, report_json, [] { return cmd_fixture_list(); });
}

int ak_fixture_emit(const char* name, char** report_json) {
  return run("fixtures", 0, report_json,
             [&] { return cmd_fixture_emit(name ? name : ""); });
}

int ak_fixture_spec_text(const char* name, char** spec_text) {
  try {
    FixtureBundle b = fixture(name ? name : "");
    if (spec_text) *spec_text = dup_string(emit_spec(b));
    return AK_OK;
  } catch (const Error& e) {
    if (spec_text) *spec_text = dup_string(std::string(e.what()));
    return AK_USAGE;
  }
}

}  // extern "C"
