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
#include "specfile.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace algk {

namespace {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
};

using Sections = std::map<std::string, std::vector<Entry>>;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw Error("ParseError", "line " + std::to_string(line) + ": " + msg);
}

Sections read_sections(const std::string& text) {
  static const std::vector<std::string> known{
      "ring",    "weights",  "algebroid",   "anchor",       "bracket",
      "connection", "morphism", "dual",     "dual_anchor",  "dual_bracket",
      "bivector"};
  Sections sections;
  std::istringstream in(text);
  std::string raw;
  std::string current;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(lineno, "unterminated section header");
      current = trim(line.substr(1, line.size() - 2));
      if (std::find(known.begin(), known.end(), current) == known.end())
        parse_fail(lineno, "unknown section '" + current + "'");
      sections[current];  // register even if empty
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(lineno, "expected 'key = value'");
    if (current.empty()) parse_fail(lineno, "entry outside of any section");
    sections[current].push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno});
  }
  return sections;
}

const Entry* find_entry(const Sections& s, const std::string& section,
                        const std::string& key) {
  auto it = s.find(section);
  if (it == s.end()) return nullptr;
  for (const auto& e : it->second)
    if (e.key == key) return &e;
  return nullptr;
}

std::vector<Poly> parse_poly_list(const PolyRing& ring, const std::string& value,
                                  std::size_t expected, std::size_t line) {
  auto parts = split_commas(value);
  if (parts.size() != expected)
    parse_fail(line, "expected " + std::to_string(expected) + " comma-separated entries, got " +
                         std::to_string(parts.size()));
  std::vector<Poly> out;
  for (const auto& p : parts) {
    try {
      out.push_back(Poly::parse(ring, p));
    } catch (const Error& e) {
      parse_fail(line, std::string(e.what()));
    }
  }
  return out;
}

struct AlgebroidSections {
  std::string section, anchor_section, bracket_section;
  std::string basis_key = "basis";
  std::string weights_inline_key;  // dual carries its weights inline
};

AlgebroidPtr parse_algebroid_block(const Sections& sections, const PolyRing& ring,
                                   const std::optional<std::vector<int>>& var_weights,
                                   const AlgebroidSections& where) {
  const Entry* basis = find_entry(sections, where.section, where.basis_key);
  if (!basis) throw Error("ParseError", "missing '" + where.basis_key + "' in [" +
                                            where.section + "]");
  std::vector<std::string> names = split_commas(basis->value);
  const std::size_t n = names.size();

  // Anchors, one entry per basis element.
  std::vector<Derivation> anchor(n, Derivation(ring));
  auto anchor_it = sections.find(where.anchor_section);
  std::vector<bool> seen(n, false);
  if (anchor_it != sections.end()) {
    for (const auto& e : anchor_it->second) {
      auto pos = std::find(names.begin(), names.end(), e.key);
      if (pos == names.end())
        throw Error("SemanticError", "line " + std::to_string(e.line) +
                                         ": undeclared basis name '" + e.key + "'");
      std::size_t i = pos - names.begin();
      anchor[i] = Derivation(ring, parse_poly_list(ring, e.value, ring.var_count(), e.line));
      seen[i] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i] && ring.var_count() > 0)
      throw Error("ParseError", "missing anchor entry for '" + names[i] + "'");

  std::vector<std::vector<Section>> bracket(n, std::vector<Section>(n, Section(n, Poly(ring))));
  auto bracket_it = sections.find(where.bracket_section);
  if (bracket_it != sections.end()) {
    for (const auto& e : bracket_it->second) {
      auto pair = split_commas(e.key);
      if (pair.size() != 2) parse_fail(e.line, "bracket key must be 'ei,ej'");
      auto p1 = std::find(names.begin(), names.end(), pair[0]);
      auto p2 = std::find(names.begin(), names.end(), pair[1]);
      if (p1 == names.end() || p2 == names.end())
        throw Error("SemanticError", "line " + std::to_string(e.line) +
                                         ": undeclared basis name in bracket key");
      std::size_t i = p1 - names.begin(), j = p2 - names.begin();
      if (i >= j)
        throw Error("SemanticError", "line " + std::to_string(e.line) +
                                         ": bracket keys require i < j in basis order");
      bracket[i][j] = parse_poly_list(ring, e.value, n, e.line);
    }
  }

  std::optional<WeightData> w;
  if (var_weights) {
    std::vector<int> bw(n, 0);
    if (!where.weights_inline_key.empty()) {
      const Entry* we = find_entry(sections, where.section, where.weights_inline_key);
      if (we) {
        auto parts = split_commas(we->value);
        if (parts.size() != n) parse_fail(we->line, "weights count mismatch");
        for (std::size_t i = 0; i < n; ++i) bw[i] = std::stoi(parts[i]);
      }
    } else {
      auto wit = sections.find("weights");
      if (wit != sections.end())
        for (const auto& e : wit->second) {
          auto pos = std::find(names.begin(), names.end(), e.key);
          if (pos != names.end()) bw[pos - names.begin()] = std::stoi(e.value);
        }
    }
    w = WeightData{*var_weights, std::move(bw)};
  }
  return std::make_shared<Algebroid>(ring, std::move(names), std::move(anchor),
                                     std::move(bracket), std::move(w));
}

FixtureBundle resolve_target(const std::string& target, const FileLoader& loader) {
  const std::string file_prefix = "file:";
  if (target.rfind(file_prefix, 0) == 0) {
    if (!loader)
      throw Error("SemanticError", "no file loader available for morphism target '" +
                                       target + "'");
    return parse_spec(loader(target.substr(file_prefix.size())), loader);
  }
  return fixture(target);
}

}  // namespace

FixtureBundle parse_spec(const std::string& text, const FileLoader& loader) {
  Sections sections = read_sections(text);
  FixtureBundle bundle;

  const Entry* vars = find_entry(sections, "ring", "vars");
  if (!vars) throw Error("ParseError", "missing [ring] section with a 'vars' entry");
  PolyRing ring = PolyRing::create(split_commas(vars->value));

  std::optional<std::vector<int>> var_weights;
  auto wit = sections.find("weights");
  if (wit != sections.end()) {
    std::vector<int> vw(ring.var_count(), 0);
    for (const auto& e : wit->second) {
      int idx = ring.var_index(e.key);
      if (idx >= 0) vw[idx] = std::stoi(e.value);
    }
    var_weights = std::move(vw);
  }

  const Entry* name = find_entry(sections, "algebroid", "name");
  bundle.name = name ? name->value : "algebroid";
  bundle.algebroid = parse_algebroid_block(sections, ring, var_weights,
                                           {"algebroid", "anchor", "bracket"});

  if (sections.count("connection")) {
    const Entry* mr = find_entry(sections, "connection", "module_rank");
    std::size_t r = mr ? std::stoul(mr->value) : 1;
    std::optional<std::vector<int>> mw;
    if (const Entry* mwe = find_entry(sections, "connection", "module_weights")) {
      std::vector<int> v;
      for (const auto& p : split_commas(mwe->value)) v.push_back(std::stoi(p));
      mw = std::move(v);
    }
    const std::size_t n = bundle.algebroid->rank();
    std::vector<std::vector<std::vector<Poly>>> mats(
        n, std::vector<std::vector<Poly>>(r, std::vector<Poly>(r, Poly(ring))));
    for (const auto& e : sections.at("connection")) {
      if (e.key == "module_rank" || e.key == "module_weights") continue;
      int idx = bundle.algebroid->basis_index(e.key);
      if (idx < 0)
        throw Error("SemanticError", "line " + std::to_string(e.line) +
                                         ": undeclared basis name '" + e.key + "'");
      auto flat = parse_poly_list(ring, e.value, r * r, e.line);
      for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) mats[idx][a][b] = flat[a * r + b];
    }
    bundle.top_connection = Connection(bundle.algebroid, r, std::move(mats), std::move(mw));
  }

  if (sections.count("morphism")) {
    const Entry* target = find_entry(sections, "morphism", "target");
    const Entry* matrix = find_entry(sections, "morphism", "matrix");
    if (!target || !matrix)
      throw Error("ParseError", "[morphism] needs 'target' and 'matrix' entries");
    bundle.morphism_target = target->value;
    FixtureBundle tgt = resolve_target(target->value, loader);
    const std::size_t rows = tgt.algebroid->rank();
    const std::size_t cols = bundle.algebroid->rank();
    auto flat = parse_poly_list(ring, matrix->value, rows * cols, matrix->line);
    std::vector<std::vector<Poly>> m(rows, std::vector<Poly>(cols, Poly(ring)));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = flat[i * cols + j];
    bundle.morphism_matrix = std::move(m);
  }

  if (sections.count("dual")) {
    AlgebroidSections where{"dual", "dual_anchor", "dual_bracket"};
    where.weights_inline_key = "weights";
    bundle.dual = parse_algebroid_block(sections, ring, var_weights, where);
  }

  if (sections.count("bivector")) {
    AlgebroidPtr tangent = tangent_algebroid(ring);
    detail::ExtTable table;
    for (const auto& e : sections.at("bivector")) {
      auto pair = split_commas(e.key);
      if (pair.size() != 2) parse_fail(e.line, "bivector key must be 'xi,xj'");
      int i = ring.var_index(pair[0]);
      int j = ring.var_index(pair[1]);
      if (i < 0 || j < 0)
        throw Error("SemanticError", "line " + std::to_string(e.line) +
                                         ": undeclared variable in bivector key");
      if (i >= j)
        throw Error("SemanticError",
                    "line " + std::to_string(e.line) + ": bivector keys require i < j");
      auto v = parse_poly_list(ring, e.value, 1, e.line);
      detail::table_add(table, (IndexMask(1) << i) | (IndexMask(1) << j), v[0]);
    }
    bundle.bivector = Multivector(tangent, std::move(table));
  }

  return bundle;
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

std::string poly_list(const std::vector<Poly>& v) {
  std::vector<std::string> parts;
  for (const auto& p : v) parts.push_back(p.to_string());
  return join(parts);
}

void emit_algebroid_block(std::ostringstream& out, const Algebroid& alg,
                          const AlgebroidSections& where, const std::string& name) {
  out << "[" << where.section << "]\n";
  if (!name.empty()) out << "name = " << name << "\n";
  out << where.basis_key << " = " << join(alg.basis_names()) << "\n";
  if (!where.weights_inline_key.empty() && alg.weights()) {
    std::vector<std::string> parts;
    for (int w : alg.weights()->basis_weights) parts.push_back(std::to_string(w));
    out << where.weights_inline_key << " = " << join(parts) << "\n";
  }
  out << "\n[" << where.anchor_section << "]\n";
  for (std::size_t i = 0; i < alg.rank(); ++i)
    out << alg.basis_names()[i] << " = " << poly_list(alg.anchor(i).components()) << "\n";
  if (alg.rank() >= 2) {
    out << "\n[" << where.bracket_section << "]\n";
    for (std::size_t i = 0; i < alg.rank(); ++i)
      for (std::size_t j = i + 1; j < alg.rank(); ++j)
        out << alg.basis_names()[i] << "," << alg.basis_names()[j] << " = "
            << poly_list(alg.bracket_basis(i, j)) << "\n";
  }
}

}  // namespace

std::string emit_spec(const FixtureBundle& bundle) {
  const Algebroid& alg = *bundle.algebroid;
  const PolyRing& ring = alg.ring();
  std::ostringstream out;
  out << "[ring]\n";
  out << "vars = " << join(ring.vars()) << "\n";
  if (alg.weights()) {
    out << "\n[weights]\n";
    for (std::size_t j = 0; j < ring.var_count(); ++j)
      out << ring.var_name(j) << " = " << alg.weights()->var_weights[j] << "\n";
    for (std::size_t i = 0; i < alg.rank(); ++i)
      out << alg.basis_names()[i] << " = " << alg.weights()->basis_weights[i] << "\n";
  }
  out << "\n";
  emit_algebroid_block(out, alg, {"algebroid", "anchor", "bracket"}, bundle.name);

  if (bundle.top_connection) {
    const Connection& c = *bundle.top_connection;
    out << "\n[connection]\n";
    out << "module_rank = " << c.module_rank() << "\n";
    if (c.module_weights()) {
      std::vector<std::string> parts;
      for (int w : *c.module_weights()) parts.push_back(std::to_string(w));
      out << "module_weights = " << join(parts) << "\n";
    }
    for (std::size_t i = 0; i < alg.rank(); ++i) {
      std::vector<Poly> flat;
      for (const auto& row : c.op(i).matrix())
        for (const auto& p : row) flat.push_back(p);
      out << alg.basis_names()[i] << " = " << poly_list(flat) << "\n";
    }
  }

  if (bundle.morphism_target && bundle.morphism_matrix) {
    out << "\n[morphism]\n";
    out << "target = " << *bundle.morphism_target << "\n";
    std::vector<Poly> flat;
    for (const auto& row : *bundle.morphism_matrix)
      for (const auto& p : row) flat.push_back(p);
    out << "matrix = " << poly_list(flat) << "\n";
  }

  if (bundle.dual) {
    out << "\n";
    AlgebroidSections where{"dual", "dual_anchor", "dual_bracket"};
    where.weights_inline_key = "weights";
    emit_algebroid_block(out, *bundle.dual, where, "");
  }

  if (bundle.bivector) {
    out << "\n[bivector]\n";
    for (const auto& [mask, p] : bundle.bivector->components()) {
      auto idx = mask_indices(mask);
      out << ring.var_name(idx[0]) << "," << ring.var_name(idx[1]) << " = "
          << p.to_string() << "\n";
    }
  }
  return out.str();
}

AlgebroidMorphism spec_morphism(const FixtureBundle& bundle, const FileLoader& loader) {
  if (!bundle.morphism_target || !bundle.morphism_matrix)
    throw Error("SemanticError", "spec has no [morphism] section");
  FixtureBundle target = resolve_target(*bundle.morphism_target, loader);
  return AlgebroidMorphism(bundle.algebroid, target.algebroid, *bundle.morphism_matrix);
}

}  // namespace algk
