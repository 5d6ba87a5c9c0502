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
#include "algebroid.hpp"

#include <algorithm>
#include <set>

#include "rng.hpp"

namespace algk {

namespace {

std::string section_string(const Algebroid& alg, const Section& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + s[i].to_string() + ")*" + alg.basis_names()[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace

Algebroid::Algebroid(PolyRing ring, std::vector<std::string> basis_names,
                     std::vector<Derivation> anchor,
                     std::vector<std::vector<Section>> bracket_upper,
                     std::optional<WeightData> weights)
    : ring_(std::move(ring)),
      basis_names_(std::move(basis_names)),
      anchor_(std::move(anchor)),
      bracket_(std::move(bracket_upper)),
      weights_(std::move(weights)) {
  const std::size_t n = basis_names_.size();
  std::set<std::string> seen;
  for (const auto& b : basis_names_) {
    if (!is_identifier(b)) throw Error("SemanticError", "invalid basis name '" + b + "'");
    if (!seen.insert(b).second)
      throw Error("SemanticError", "duplicate basis name '" + b + "'");
    if (ring_.var_index(b) >= 0)
      throw Error("SemanticError", "basis name '" + b + "' collides with a ring variable");
  }
  if (anchor_.size() != n) throw Error("SemanticError", "anchor list length mismatch");
  for (const auto& d : anchor_) require_same_ring(d.ring(), ring_);
  if (bracket_.size() != n) throw Error("SemanticError", "bracket table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (bracket_[i].size() != n) throw Error("SemanticError", "bracket table size mismatch");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (bracket_[i][j].size() != n)
        throw Error("SemanticError", "bracket entry has wrong rank");
      for (const auto& p : bracket_[i][j]) require_same_ring(p.ring(), ring_);
    }
  }
  if (weights_) {
    if (weights_->var_weights.size() != ring_.var_count() ||
        weights_->basis_weights.size() != n)
      throw Error("SemanticError", "weight data dimension mismatch");
    for (int w : weights_->var_weights)
      if (w < 0) throw Error("SemanticError", "variable weights must be nonnegative");
  }
}

int Algebroid::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < basis_names_.size(); ++i)
    if (basis_names_[i] == name) return static_cast<int>(i);
  return -1;
}

Section Algebroid::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return zero_section();
  if (i < j) return bracket_[i][j];
  Section s = bracket_[j][i];
  for (auto& p : s) p = -p;
  return s;
}

Section Algebroid::basis_section(std::size_t i) const {
  Section s = zero_section();
  s.at(i) = Poly::constant(ring_, 1);
  return s;
}

bool Algebroid::structure_equals(const Algebroid& o) const {
  if (ring_ != o.ring_ || basis_names_ != o.basis_names_) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!(anchor_[i] == o.anchor_[i])) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (bracket_[i][j] != o.bracket_[i][j]) return false;
  if (weights_.has_value() != o.weights_.has_value()) return false;
  if (weights_ && (weights_->var_weights != o.weights_->var_weights ||
                   weights_->basis_weights != o.weights_->basis_weights))
    return false;
  return true;
}

void require_same_algebroid(const AlgebroidPtr& a, const AlgebroidPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->structure_equals(*b))
    throw Error("AlgebroidMismatch", "operands live over different algebroids");
}

Derivation anchor_of_section(const Algebroid& alg, const Section& u) {
  Derivation d(alg.ring());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    d = d + alg.anchor(i).scaled(u[i]);
  }
  return d;
}

Section bracket_sections(const Algebroid& alg, const Section& u, const Section& v) {
  const std::size_t n = alg.rank();
  if (u.size() != n || v.size() != n)
    throw Error("RankMismatch", "section length does not match algebroid rank");
  Section out = alg.zero_section();
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!v[j].is_zero()) {
        Section c = alg.bracket_basis(i, j);
        Poly uv = u[i] * v[j];
        for (std::size_t k = 0; k < n; ++k)
          if (!c[k].is_zero()) out[k] = out[k] + uv * c[k];
      }
      // Leibniz terms: u_i a(e_i)(v_j) e_j  -  v_j a(e_j)(u_i) e_i
      Poly t1 = alg.anchor(i).apply(v[j]);
      if (!t1.is_zero()) out[j] = out[j] + u[i] * t1;
      if (!v[j].is_zero()) {
        Poly t2 = alg.anchor(j).apply(u[i]);
        if (!t2.is_zero()) out[i] = out[i] - v[j] * t2;
      }
    }
  }
  return out;
}

AxiomReport check_weight_homogeneity(const Algebroid& alg) {
  AxiomReport rep;
  if (!alg.weights()) {
    rep.add({"weights", "no weight data declared", "", ""});
    return rep;
  }
  const auto& w = *alg.weights();
  const std::size_t n = alg.rank();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < alg.ring().var_count(); ++j) {
      const Poly& a = alg.anchor(i).components()[j];
      long target = w.basis_weights[i] + w.var_weights[j];
      if (!a.is_homogeneous_of_weight(target, w.var_weights))
        rep.add({"weight-homogeneity",
                 "anchor(" + alg.basis_names()[i] + ") component d/d" +
                     alg.ring().var_name(j),
                 a.to_string(), "homogeneous of weight " + std::to_string(target)});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Section c = alg.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        long target = w.basis_weights[i] + w.basis_weights[j] - w.basis_weights[k];
        if (!c[k].is_homogeneous_of_weight(target, w.var_weights))
          rep.add({"weight-homogeneity",
                   "structure constant [" + alg.basis_names()[i] + "," +
                       alg.basis_names()[j] + "] on " + alg.basis_names()[k],
                   c[k].to_string(), "homogeneous of weight " + std::to_string(target)});
      }
    }
  return rep;
}

AxiomReport check_axioms(const Algebroid& alg, std::uint64_t seed, int samples) {
  AxiomReport rep;
  const std::size_t n = alg.rank();

  // Jacobi on basis triples; A-multilinearity modulo the anchor extension
  // makes the basis check sufficient for all sections.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Section s1 = bracket_sections(alg, alg.bracket_basis(i, j), alg.basis_section(k));
        Section s2 = bracket_sections(alg, alg.bracket_basis(j, k), alg.basis_section(i));
        Section s3 = bracket_sections(alg, alg.bracket_basis(k, i), alg.basis_section(j));
        Section sum = alg.zero_section();
        for (std::size_t t = 0; t < n; ++t) sum[t] = s1[t] + s2[t] + s3[t];
        bool zero = std::all_of(sum.begin(), sum.end(),
                                [](const Poly& p) { return p.is_zero(); });
        if (!zero)
          rep.add({"jacobi",
                   "(" + alg.basis_names()[i] + "," + alg.basis_names()[j] + "," +
                       alg.basis_names()[k] + ")",
                   section_string(alg, sum), "0"});
      }

  // Anchor is a bracket homomorphism into derivations.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Derivation lhs = anchor_of_section(alg, alg.bracket_basis(i, j));
      Derivation rhs = Derivation::commutator(alg.anchor(i), alg.anchor(j));
      if (!(lhs == rhs))
        rep.add({"anchor-homomorphism",
                 "(" + alg.basis_names()[i] + "," + alg.basis_names()[j] + ")",
                 lhs.to_string(), rhs.to_string()});
    }

  if (alg.weights()) rep.merge(check_weight_homogeneity(alg));

  // Leibniz guard on random (f, D, D'); the extension satisfies it by
  // construction, this re-verifies the implementation.
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Poly f = rng.poly(alg.ring());
    Section d1(n, Poly(alg.ring())), d2(n, Poly(alg.ring()));
    for (std::size_t i = 0; i < n; ++i) {
      d1[i] = rng.poly(alg.ring(), 1, 2);
      d2[i] = rng.poly(alg.ring(), 1, 2);
    }
    Section fd2 = d2;
    for (auto& p : fd2) p = p * f;
    Section lhs = bracket_sections(alg, d1, fd2);
    Section rhs = bracket_sections(alg, d1, d2);
    Poly af = anchor_of_section(alg, d1).apply(f);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = rhs[i] * f + af * d2[i];
    if (lhs != rhs) {
      rep.add({"leibniz", "random sample " + std::to_string(s), section_string(alg, lhs),
               section_string(alg, rhs)});
      break;
    }
  }
  return rep;
}

AlgebroidMorphism::AlgebroidMorphism(AlgebroidPtr source, AlgebroidPtr target,
                                     std::vector<std::vector<Poly>> matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!source_ || !target_) throw Error("SemanticError", "null algebroid in morphism");
  require_same_ring(source_->ring(), target_->ring());
  if (matrix_.size() != target_->rank())
    throw Error("SemanticError", "morphism matrix row count mismatch");
  for (const auto& row : matrix_) {
    if (row.size() != source_->rank())
      throw Error("SemanticError", "morphism matrix column count mismatch");
    for (const auto& p : row) require_same_ring(p.ring(), source_->ring());
  }
}

AlgebroidMorphism AlgebroidMorphism::identity(const AlgebroidPtr& alg) {
  std::vector<std::vector<Poly>> m(alg->rank(),
                                   std::vector<Poly>(alg->rank(), Poly(alg->ring())));
  for (std::size_t i = 0; i < alg->rank(); ++i) m[i][i] = Poly::constant(alg->ring(), 1);
  return AlgebroidMorphism(alg, alg, std::move(m));
}

AlgebroidMorphism AlgebroidMorphism::compose(const AlgebroidMorphism& outer,
                                             const AlgebroidMorphism& inner) {
  require_same_algebroid(outer.source(), inner.target());
  const auto& a = outer.matrix();
  const auto& b = inner.matrix();
  std::vector<std::vector<Poly>> m(
      outer.target()->rank(),
      std::vector<Poly>(inner.source()->rank(), Poly(inner.source()->ring())));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) m[i][j] = m[i][j] + a[i][k] * b[k][j];
  return AlgebroidMorphism(inner.source(), outer.target(), std::move(m));
}

Section AlgebroidMorphism::apply(const Section& src) const {
  if (src.size() != source_->rank())
    throw Error("RankMismatch", "section length does not match morphism source");
  Section out(target_->rank(), Poly(target_->ring()));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < src.size(); ++j)
      if (!src[j].is_zero()) out[i] = out[i] + matrix_[i][j] * src[j];
  return out;
}

Poly AlgebroidMorphism::determinant() const {
  const std::size_t n = matrix_.size();
  if (n != source_->rank())
    throw Error("RankMismatch", "determinant needs equal source and target ranks");
  // Cofactor expansion; ranks are small.
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  struct Rec {
    const std::vector<std::vector<Poly>>& m;
    const PolyRing& ring;
    Poly det(std::size_t row, std::vector<std::size_t>& cols) {
      if (cols.empty()) return Poly::constant(ring, 1);
      Poly acc(ring);
      for (std::size_t t = 0; t < cols.size(); ++t) {
        std::size_t c = cols[t];
        if (m[row][c].is_zero()) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t u = 0; u < cols.size(); ++u)
          if (u != t) rest.push_back(cols[u]);
        Poly sub = det(row + 1, rest);
        Poly term = m[row][c] * sub;
        acc = (t % 2 == 0) ? acc + term : acc - term;
      }
      return acc;
    }
  } rec{matrix_, source_->ring()};
  return rec.det(0, cols);
}

AxiomReport check_morphism(const AlgebroidMorphism& phi) {
  AxiomReport rep;
  const Algebroid& src = *phi.source();
  const Algebroid& tgt = *phi.target();
  const std::size_t n = src.rank();

  for (std::size_t j = 0; j < n; ++j) {
    Derivation lhs = anchor_of_section(tgt, phi.apply(src.basis_section(j)));
    const Derivation& rhs = src.anchor(j);
    if (!(lhs == rhs))
      rep.add({"anchor-compatibility", src.basis_names()[j], lhs.to_string(),
               rhs.to_string()});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Section lhs = phi.apply(src.bracket_basis(i, j));
      Section rhs = bracket_sections(tgt, phi.apply(src.basis_section(i)),
                                     phi.apply(src.basis_section(j)));
      if (lhs != rhs)
        rep.add({"bracket-compatibility",
                 "(" + src.basis_names()[i] + "," + src.basis_names()[j] + ")",
                 section_string(tgt, lhs), section_string(tgt, rhs)});
    }
  return rep;
}

AlgebroidPtr tangent_algebroid(const PolyRing& ring) {
  const std::size_t m = ring.var_count();
  std::vector<std::string> names;
  std::vector<Derivation> anchor;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    anchor.push_back(Derivation::coordinate(ring, i));
  }
  std::vector<std::vector<Section>> bracket(
      m, std::vector<Section>(m, Section(m, Poly(ring))));
  WeightData w{std::vector<int>(m, 1), std::vector<int>(m, -1)};
  return std::make_shared<Algebroid>(ring, std::move(names), std::move(anchor),
                                     std::move(bracket), std::move(w));
}

AlgebroidPtr log_tangent_fixture(const PolyRing& ring,
                                 const std::vector<std::size_t>& log_var_indices) {
  const std::size_t m = ring.var_count();
  std::set<std::size_t> sel;
  for (auto i : log_var_indices) {
    if (i >= m) throw Error("SemanticError", "log variable index out of range");
    if (!sel.insert(i).second)
      throw Error("DuplicateVariable",
                  "variable '" + ring.var_name(i) + "' selected twice");
  }
  std::vector<std::string> names;
  std::vector<Derivation> anchor;
  std::vector<int> bw;
  for (std::size_t i = 0; i < m; ++i) {
    if (!sel.count(i)) continue;
    names.push_back("e" + std::to_string(names.size() + 1));
    anchor.push_back(Derivation::coordinate(ring, i).scaled(Poly::variable(ring, i)));
    bw.push_back(0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (sel.count(i)) continue;
    names.push_back("e" + std::to_string(names.size() + 1));
    anchor.push_back(Derivation::coordinate(ring, i));
    bw.push_back(-1);
  }
  std::vector<std::vector<Section>> bracket(
      m, std::vector<Section>(m, Section(m, Poly(ring))));
  WeightData w{std::vector<int>(m, 1), std::move(bw)};
  return std::make_shared<Algebroid>(ring, std::move(names), std::move(anchor),
                                     std::move(bracket), std::move(w));
}

}  // namespace algk
