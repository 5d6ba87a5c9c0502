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

// Command-line front end; all computation goes through the C API of the
// shared library.

#include <algebroidkit.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <string>

namespace {

using nlohmann::json;

bool use_color() {
  const char* env = std::getenv("ALGEBROID_KIT_COLOR");
  if (env && std::string(env) == "never") return false;
  return isatty(fileno(stdout));
}

std::string verdict(bool ok) {
  if (!use_color()) return ok ? "PASS" : "FAIL";
  return ok ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

struct SessionHandle {
  ak_session* s = nullptr;
  ~SessionHandle() { ak_close(s); }
};

// Fixture names resolve against the built-ins, anything else is a path.
ak_session* open_input(const std::string& input) {
  char* err = nullptr;
  ak_session* s = ak_open_fixture(input.c_str(), nullptr);
  if (!s) s = ak_open_file(input.c_str(), &err);
  if (!s) {
    std::cerr << "error: " << (err ? err : "cannot open input") << "\n";
    ak_free(err);
    std::exit(2);
  }
  ak_free(err);
  return s;
}

void print_violations(const json& rep) {
  for (const auto& v : rep.at("violations")) {
    std::cout << "    " << v.at("axiom").get<std::string>() << " at "
              << v.at("witness").get<std::string>() << "\n"
              << "      lhs: " << v.at("lhs").get<std::string>() << "\n"
              << "      rhs: " << v.at("rhs").get<std::string>() << "\n";
  }
}

void print_axiom_report(const std::string& name, const json& rep) {
  bool ok = rep.at("passed").get<bool>();
  std::cout << "  [" << verdict(ok) << "] " << name << "\n";
  if (!ok) print_violations(rep);
}

void print_dims(const std::string& title, const json& dims, const char* symbol) {
  std::cout << "  " << title << " (weights " << dims.at("min_weight").get<long>() << ".."
            << dims.at("max_weight").get<long>() << ", zero entries omitted)\n";
  if (dims.at("nonzero").empty()) {
    std::cout << "    all dimensions zero\n";
    return;
  }
  std::printf("    %-8s %-8s %s\n", "degree", "weight", "dim");
  for (const auto& e : dims.at("nonzero"))
    std::printf("    %s%-7d %-8ld %zu\n", symbol, e.at("degree").get<int>(),
                e.at("weight").get<long>(), e.at("dim").get<std::size_t>());
}

int render(const json& report, bool as_json, int status) {
  if (as_json) {
    std::cout << report.dump(2) << "\n";
    return status;
  }
  const std::string command = report.at("command").get<std::string>();
  const std::string st = report.at("status").get<std::string>();
  if (st == "error") {
    std::cout << "[" << verdict(false) << "] " << command << ": "
              << report.at("error").at("message").get<std::string>() << "\n";
    return status;
  }
  const json& payload = report.at("payload");
  if (command == "check") {
    for (const auto& [name, rep] : payload.at("checks").items())
      print_axiom_report(name, rep);
  } else if (command == "cohomology" || command == "homology") {
    print_dims(command == "cohomology" ? "H^k by weight" : "H_k by weight",
               payload.at("dims"), command == "cohomology" ? "^" : "_");
  } else if (command == "duality") {
    print_dims("homology H_k", payload.at("homology"), "_");
    print_dims("twisted cohomology H^k", payload.at("cohomology"), "^");
    std::cout << "  [" << verdict(payload.at("dims_match").get<bool>())
              << "] dimension tables match across the degree reversal\n";
    if (payload.contains("morphism")) {
      const json& m = payload.at("morphism");
      print_dims("sub homology H_k", m.at("sub_homology"), "_");
      print_dims("sub twisted cohomology H^k", m.at("sub_cohomology"), "^");
      std::cout << "  [" << verdict(m.at("sub_dims_match").get<bool>())
                << "] sub dimension tables match\n";
      std::cout << "  [" << verdict(m.at("factorization_commutes").get<bool>())
                << "] factorization through the rooted maps commutes\n";
    }
  } else if (command == "bv-verify") {
    print_axiom_report("square_zero", payload.at("square_zero").contains("passed")
                                          ? json{{"passed",
                                                  payload.at("square_zero").at("passed")},
                                                 {"violations", json::array()}}
                                          : payload.at("square_zero"));
    std::cout << "  [" << verdict(payload.at("generating_identity").at("passed").get<bool>())
              << "] generating_identity\n";
    std::cout << "  [" << verdict(payload.at("multiplier_recovery").at("passed").get<bool>())
              << "] multiplier_recovery\n";
    std::cout << "  sign profile: " << payload.at("sign_profile").get<std::string>() << "\n";
  } else if (command == "bialgebroid") {
    print_axiom_report("compatibility", payload.at("compatibility"));
  } else if (command == "pbw") {
    std::cout << payload.at("normal_form").get<std::string>() << "\n";
  } else if (command == "morphism-check") {
    for (const auto& [name, rep] : payload.items()) print_axiom_report(name, rep);
  } else if (command == "cotangent") {
    print_axiom_report("axioms", payload.at("axioms"));
    std::cout << payload.at("spec").get<std::string>();
  } else if (command == "fixtures") {
    if (payload.contains("names"))
      for (const auto& n : payload.at("names")) std::cout << n.get<std::string>() << "\n";
    else
      std::cout << payload.at("spec").get<std::string>();
  }
  std::cout << "[" << verdict(st == "pass") << "] " << command << "\n";
  return status;
}

int emit(int status, char* report, bool as_json) {
  json j = json::parse(report);
  ak_free(report);
  return render(j, as_json, status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Lie-Rinehart / Lie algebroid computations over polynomial rings"};
  app.require_subcommand(1);

  bool as_json = false;
  std::uint64_t seed = 0;
  int samples = 100;
  long max_weight = 6;
  int max_degree = 3;
  app.add_flag("--json", as_json, "emit the raw JSON report");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--samples", samples, "sample count for randomized suites");

  std::string input, expr, morphism_file, fixture_name, sub;
  bool twisted = false;

  auto* check = app.add_subcommand("check", "run the axiom checks of a spec file");
  check->add_option("file", input)->required();

  auto* coh = app.add_subcommand("cohomology", "exact cohomology dimensions by weight");
  coh->add_option("file", input)->required();
  coh->add_option("--max-weight", max_weight);
  coh->add_flag("--twisted", twisted, "use the spec connection as coefficients");

  auto* hom = app.add_subcommand("homology", "exact homology of the generating operator");
  hom->add_option("file", input)->required();
  hom->add_option("--max-weight", max_weight);

  auto* dua = app.add_subcommand("duality", "homology/cohomology duality tables");
  dua->add_option("file", input)->required();
  dua->add_option("--max-weight", max_weight);
  dua->add_option("--morphism", morphism_file, "spec file with a [morphism] into this one");

  auto* bv = app.add_subcommand("bv-verify", "square-zero and generating-identity suites");
  bv->add_option("file", input)->required();

  auto* bia = app.add_subcommand("bialgebroid", "dual-pair compatibility check");
  bia->add_option("file", input)->required();

  auto* pbw = app.add_subcommand("pbw", "normal form in the enveloping algebra");
  pbw->add_option("file", input)->required();
  pbw->add_option("--expr", expr, "expression over variables and basis names")->required();

  auto* mor = app.add_subcommand("morphism-check", "morphism and induced-map checks");
  mor->add_option("file", input)->required();
  mor->add_option("--max-degree", max_degree);

  auto* cot = app.add_subcommand("cotangent", "cotangent algebroid of the [bivector]");
  cot->add_option("file", input)->required();

  auto* fix = app.add_subcommand("fixtures", "list or emit built-in fixtures");
  fix->add_option("action", sub, "'list' or 'emit'")->required();
  fix->add_option("name", fixture_name, "fixture name for 'emit'");

  CLI11_PARSE(app, argc, argv);

  char* report = nullptr;
  if (fix->parsed()) {
    if (sub == "list") return emit(ak_fixture_list(&report), report, as_json);
    if (sub == "emit") {
      if (fixture_name.empty()) {
        std::cerr << "error: 'fixtures emit' needs a name\n";
        return 2;
      }
      return emit(ak_fixture_emit(fixture_name.c_str(), &report), report, as_json);
    }
    std::cerr << "error: unknown fixtures action '" << sub << "'\n";
    return 2;
  }

  SessionHandle session{open_input(input)};
  if (check->parsed())
    return emit(ak_check(session.s, seed, samples, &report), report, as_json);
  if (coh->parsed())
    return emit(ak_cohomology(session.s, max_weight, twisted ? 1 : 0, &report), report,
                as_json);
  if (hom->parsed())
    return emit(ak_homology(session.s, max_weight, &report), report, as_json);
  if (dua->parsed()) {
    SessionHandle morphism;
    if (!morphism_file.empty()) morphism.s = open_input(morphism_file);
    return emit(ak_duality(session.s, morphism.s, max_weight, &report), report, as_json);
  }
  if (bv->parsed())
    return emit(ak_bv_verify(session.s, seed, samples, &report), report, as_json);
  if (bia->parsed())
    return emit(ak_bialgebroid(session.s, seed, samples, &report), report, as_json);
  if (pbw->parsed()) return emit(ak_pbw(session.s, expr.c_str(), &report), report, as_json);
  if (mor->parsed())
    return emit(ak_morphism_check(session.s, seed, samples, max_degree, &report), report,
                as_json);
  if (cot->parsed()) return emit(ak_cotangent(session.s, seed, &report), report, as_json);
  return 2;
}
