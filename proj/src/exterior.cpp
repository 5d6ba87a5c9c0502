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
#include "exterior.hpp"

#include <bit>

#include "cecomplex.hpp"
#include "rng.hpp"

namespace algk {

int mask_degree(IndexMask m) { return std::popcount(m); }

std::vector<std::size_t> mask_indices(IndexMask m) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1u) idx.push_back(i);
  return idx;
}

int wedge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with j < i.
  int inversions = 0;
  for (IndexMask aa = a; aa != 0; aa &= aa - 1) {
    IndexMask bit = aa & (~aa + 1);
    inversions += std::popcount(b & (bit - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

namespace detail {

void table_add(ExtTable& t, IndexMask m, const Poly& p) {
  if (p.is_zero()) return;
  auto it = t.find(m);
  if (it == t.end()) {
    t.emplace(m, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) t.erase(it);
  }
}

ExtTable table_combine(const ExtTable& a, const ExtTable& b, int sign) {
  ExtTable r = a;
  for (const auto& [m, p] : b) table_add(r, m, sign < 0 ? -p : p);
  return r;
}

ExtTable table_scaled(const ExtTable& a, const Poly& f) {
  ExtTable r;
  for (const auto& [m, p] : a) table_add(r, m, p * f);
  return r;
}

ExtTable table_scaled(const ExtTable& a, const Rational& c) {
  ExtTable r;
  if (c.is_zero()) return r;
  for (const auto& [m, p] : a) r.emplace(m, p.scaled(c));
  return r;
}

ExtTable table_wedge(const ExtTable& a, const ExtTable& b) {
  ExtTable r;
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Poly prod = pa * pb;
      table_add(r, ma | mb, s < 0 ? -prod : prod);
    }
  return r;
}

std::optional<int> table_degree(const ExtTable& t) {
  if (t.empty()) return 0;
  int d = mask_degree(t.begin()->first);
  for (const auto& [m, p] : t) {
    (void)p;
    if (mask_degree(m) != d) return std::nullopt;
  }
  return d;
}

std::string table_string(const ExtTable& t, const std::vector<std::string>& names,
                         const std::string& sep_symbol) {
  if (t.empty()) return "0";
  // Sort by (degree, mask) for readability.
  std::vector<std::pair<IndexMask, const Poly*>> items;
  for (const auto& [m, p] : t) items.emplace_back(m, &p);
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int dx = mask_degree(x.first), dy = mask_degree(y.first);
    if (dx != dy) return dx < dy;
    return x.first < y.first;
  });
  std::string out;
  for (const auto& [m, p] : items) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (auto i : mask_indices(m)) {
      if (!mono.empty()) mono += "^";
      mono += sep_symbol.empty() ? names[i] : sep_symbol + names[i];
    }
    if (mono.empty())
      out += "(" + p->to_string() + ")";
    else
      out += "(" + p->to_string() + ")*" + mono;
  }
  return out;
}

}  // namespace detail

Multivector::Multivector(AlgebroidPtr alg, detail::ExtTable comp)
    : alg_(std::move(alg)), comp_(std::move(comp)) {
  for (auto it = comp_.begin(); it != comp_.end();) {
    require_same_ring(it->second.ring(), alg_->ring());
    if (mask_indices(it->first).size() &&
        mask_indices(it->first).back() >= alg_->rank())
      throw Error("SemanticError", "multivector index out of range");
    it = it->second.is_zero() ? comp_.erase(it) : std::next(it);
  }
}

Multivector Multivector::scalar(const AlgebroidPtr& alg, const Poly& f) {
  detail::ExtTable t;
  detail::table_add(t, 0, f);
  return Multivector(alg, std::move(t));
}

Multivector Multivector::basis(const AlgebroidPtr& alg, IndexMask m) {
  detail::ExtTable t;
  detail::table_add(t, m, Poly::constant(alg->ring(), 1));
  return Multivector(alg, std::move(t));
}

Multivector Multivector::from_section(const AlgebroidPtr& alg, const Section& s) {
  if (s.size() != alg->rank()) throw Error("RankMismatch", "section length mismatch");
  detail::ExtTable t;
  for (std::size_t i = 0; i < s.size(); ++i)
    detail::table_add(t, IndexMask(1) << i, s[i]);
  return Multivector(alg, std::move(t));
}

std::optional<int> Multivector::degree() const { return detail::table_degree(comp_); }

Poly Multivector::coefficient(IndexMask m) const {
  auto it = comp_.find(m);
  return it == comp_.end() ? Poly(alg_->ring()) : it->second;
}

Section Multivector::degree_one_section() const {
  Section s(alg_->rank(), Poly(alg_->ring()));
  for (const auto& [m, p] : comp_) {
    auto idx = mask_indices(m);
    if (idx.size() != 1) throw Error("DegreeError", "not a degree-1 multivector");
    s[idx[0]] = p;
  }
  return s;
}

Multivector Multivector::operator+(const Multivector& o) const {
  require_same_algebroid(alg_, o.alg_);
  return Multivector(alg_, detail::table_combine(comp_, o.comp_, +1));
}

Multivector Multivector::operator-(const Multivector& o) const {
  require_same_algebroid(alg_, o.alg_);
  return Multivector(alg_, detail::table_combine(comp_, o.comp_, -1));
}

Multivector Multivector::scaled(const Poly& f) const {
  return Multivector(alg_, detail::table_scaled(comp_, f));
}

Multivector Multivector::scaled(const Rational& c) const {
  return Multivector(alg_, detail::table_scaled(comp_, c));
}

bool Multivector::operator==(const Multivector& o) const {
  require_same_algebroid(alg_, o.alg_);
  return comp_ == o.comp_;
}

std::string Multivector::to_string() const {
  return detail::table_string(comp_, alg_->basis_names(), "");
}

Form::Form(AlgebroidPtr alg, detail::ExtTable comp)
    : alg_(std::move(alg)), comp_(std::move(comp)) {
  for (auto it = comp_.begin(); it != comp_.end();) {
    require_same_ring(it->second.ring(), alg_->ring());
    if (mask_indices(it->first).size() &&
        mask_indices(it->first).back() >= alg_->rank())
      throw Error("SemanticError", "form index out of range");
    it = it->second.is_zero() ? comp_.erase(it) : std::next(it);
  }
}

Form Form::scalar(const AlgebroidPtr& alg, const Poly& f) {
  detail::ExtTable t;
  detail::table_add(t, 0, f);
  return Form(alg, std::move(t));
}

Form Form::basis(const AlgebroidPtr& alg, IndexMask m) {
  detail::ExtTable t;
  detail::table_add(t, m, Poly::constant(alg->ring(), 1));
  return Form(alg, std::move(t));
}

std::optional<int> Form::degree() const { return detail::table_degree(comp_); }

Poly Form::coefficient(IndexMask m) const {
  auto it = comp_.find(m);
  return it == comp_.end() ? Poly(alg_->ring()) : it->second;
}

Form Form::operator+(const Form& o) const {
  require_same_algebroid(alg_, o.alg_);
  return Form(alg_, detail::table_combine(comp_, o.comp_, +1));
}

Form Form::operator-(const Form& o) const {
  require_same_algebroid(alg_, o.alg_);
  return Form(alg_, detail::table_combine(comp_, o.comp_, -1));
}

Form Form::scaled(const Poly& f) const { return Form(alg_, detail::table_scaled(comp_, f)); }
Form Form::scaled(const Rational& c) const {
  return Form(alg_, detail::table_scaled(comp_, c));
}

bool Form::operator==(const Form& o) const {
  require_same_algebroid(alg_, o.alg_);
  return comp_ == o.comp_;
}

std::string Form::to_string() const {
  std::vector<std::string> duals;
  for (const auto& n : alg_->basis_names()) duals.push_back(n + "'");
  return detail::table_string(comp_, duals, "");
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  require_same_algebroid(a.algebroid(), b.algebroid());
  return Multivector(a.algebroid(), detail::table_wedge(a.components(), b.components()));
}

Form wedge(const Form& a, const Form& b) {
  require_same_algebroid(a.algebroid(), b.algebroid());
  return Form(a.algebroid(), detail::table_wedge(a.components(), b.components()));
}

namespace {

// SN bracket of two coefficiented basis monomials f e_S, g e_T.
void sn_bracket_terms(const Algebroid& alg, IndexMask ms, const Poly& f, IndexMask mt,
                      const Poly& g, detail::ExtTable& out) {
  const auto s = mask_indices(ms);
  const auto t = mask_indices(mt);
  const int p = static_cast<int>(s.size());
  const int q = static_cast<int>(t.size());

  // f * sum_a (-1)^{p-a} a(e_{s_a})(g) e_{S \ s_a} ^ e_T
  for (int a = 1; a <= p; ++a) {
    std::size_t i = s[a - 1];
    Poly dg = alg.anchor(i).apply(g);
    if (dg.is_zero()) continue;
    IndexMask rest = ms & ~(IndexMask(1) << i);
    int ws = wedge_sign(rest, mt);
    if (ws == 0) continue;
    int sign = (((p - a) % 2 == 0) ? 1 : -1) * ws;
    Poly coeff = f * dg;
    detail::table_add(out, rest | mt, sign < 0 ? -coeff : coeff);
  }

  // -(-1)^{(p-1)(q-1)} g * sum_b (-1)^{q-b} a(e_{t_b})(f) e_{T \ t_b} ^ e_S
  int swap_sign = (((p - 1) * (q - 1)) % 2 == 0) ? -1 : 1;
  for (int b = 1; b <= q; ++b) {
    std::size_t j = t[b - 1];
    Poly df = alg.anchor(j).apply(f);
    if (df.is_zero()) continue;
    IndexMask rest = mt & ~(IndexMask(1) << j);
    int ws = wedge_sign(rest, ms);
    if (ws == 0) continue;
    int sign = swap_sign * (((q - b) % 2 == 0) ? 1 : -1) * ws;
    Poly coeff = g * df;
    detail::table_add(out, rest | ms, sign < 0 ? -coeff : coeff);
  }

  // f g * sum_{a,b} (-1)^{a+b} [e_{s_a}, e_{t_b}] ^ e_{S \ s_a} ^ e_{T \ t_b}
  Poly fg = f * g;
  if (fg.is_zero()) return;
  for (int a = 1; a <= p; ++a)
    for (int b = 1; b <= q; ++b) {
      std::size_t i = s[a - 1];
      std::size_t j = t[b - 1];
      Section c = alg.bracket_basis(i, j);
      IndexMask rs = ms & ~(IndexMask(1) << i);
      IndexMask rt = mt & ~(IndexMask(1) << j);
      int ws_rest = wedge_sign(rs, rt);
      if (ws_rest == 0) continue;
      IndexMask rest = rs | rt;
      int base_sign = (((a + b) % 2 == 0) ? 1 : -1) * ws_rest;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        int wk = wedge_sign(IndexMask(1) << k, rest);
        if (wk == 0) continue;
        Poly coeff = fg * c[k];
        int sign = base_sign * wk;
        detail::table_add(out, (IndexMask(1) << k) | rest, sign < 0 ? -coeff : coeff);
      }
    }
}

}  // namespace

Multivector sn_bracket(const Multivector& p, const Multivector& q) {
  require_same_algebroid(p.algebroid(), q.algebroid());
  const Algebroid& alg = *p.algebroid();
  detail::ExtTable out;
  for (const auto& [ms, f] : p.components())
    for (const auto& [mt, g] : q.components())
      sn_bracket_terms(alg, ms, f, mt, g, out);
  return Multivector(p.algebroid(), std::move(out));
}

Poly pairing(const Form& omega, const Multivector& p) {
  require_same_algebroid(omega.algebroid(), p.algebroid());
  auto dw = omega.degree();
  auto dp = p.degree();
  if (dw && dp && !omega.is_zero() && !p.is_zero() && *dw != *dp)
    throw Error("DegreeError", "pairing requires equal degrees");
  Poly acc(omega.algebroid()->ring());
  for (const auto& [m, f] : omega.components()) {
    auto it = p.components().find(m);
    if (it != p.components().end()) acc = acc + f * it->second;
  }
  return acc;
}

Form contract(const Form& omega, const Multivector& p) {
  require_same_algebroid(omega.algebroid(), p.algebroid());
  auto dw = omega.degree();
  auto dp = p.degree();
  if (dw && dp && !omega.is_zero() && !p.is_zero() && *dp > *dw)
    throw Error("DegreeError", "contraction degree exceeds form degree");
  detail::ExtTable out;
  for (const auto& [mt, g] : p.components())
    for (const auto& [ms, f] : omega.components()) {
      if ((mt & ms) != mt) continue;
      IndexMask rest = ms & ~mt;
      int sign = wedge_sign(mt, rest);  // e_T ^ e_rest = sign * e_S
      if (sign == 0) continue;
      Poly coeff = f * g;
      detail::table_add(out, rest, sign < 0 ? -coeff : coeff);
    }
  return Form(omega.algebroid(), std::move(out));
}

Form lie_derivative(const Section& d, const Form& omega) {
  const AlgebroidPtr& alg = omega.algebroid();
  Multivector dv = Multivector::from_section(alg, d);
  Form t1 = contract(ce_differential(*alg, omega), dv);
  // The interior product kills the scalar part of omega.
  detail::ExtTable positive;
  for (const auto& [m, p] : omega.components())
    if (m != 0) positive.emplace(m, p);
  Form t2 = ce_differential(*alg, contract(Form(alg, std::move(positive)), dv));
  return t1 + t2;
}

Multivector apply_morphism(const AlgebroidMorphism& phi, const Multivector& p) {
  const AlgebroidPtr& tgt = phi.target();
  require_same_algebroid(phi.source(), p.algebroid());
  Multivector out(tgt);
  for (const auto& [m, f] : p.components()) {
    Multivector term = Multivector::scalar(tgt, f);
    for (auto i : mask_indices(m)) {
      term = wedge(term,
                   Multivector::from_section(tgt, phi.apply(p.algebroid()->basis_section(i))));
      if (term.is_zero()) break;
    }
    out = out + term;
  }
  return out;
}

Form pullback_form(const AlgebroidMorphism& phi, const Form& omega) {
  require_same_algebroid(phi.target(), omega.algebroid());
  const AlgebroidPtr& src = phi.source();
  Form out(src);
  for (const auto& [m, f] : omega.components()) {
    Form term = Form::scalar(src, f);
    for (auto i : mask_indices(m)) {
      // eps_i pulls back to sum_j matrix[i][j] eps'_j.
      detail::ExtTable row;
      for (std::size_t j = 0; j < src->rank(); ++j)
        detail::table_add(row, IndexMask(1) << j, phi.matrix()[i][j]);
      term = wedge(term, Form(src, std::move(row)));
      if (term.is_zero()) break;
    }
    out = out + term;
  }
  return out;
}

GerstenhaberStructure gerstenhaber_from_algebroid(const AlgebroidPtr& alg) {
  return GerstenhaberStructure{alg};
}

Multivector random_multivector(const AlgebroidPtr& alg, int degree, Rng& rng) {
  detail::ExtTable t;
  const std::size_t n = alg->rank();
  if (degree > static_cast<int>(n)) return Multivector(alg);
  // Up to two random monomials of the requested degree.
  for (int rep = 0; rep < 2; ++rep) {
    IndexMask m = 0;
    while (mask_degree(m) < degree)
      m |= IndexMask(1) << static_cast<IndexMask>(rng.range(0, static_cast<long>(n) - 1));
    detail::table_add(t, m, rng.poly(alg->ring()));
  }
  return Multivector(alg, std::move(t));
}

Form random_form(const AlgebroidPtr& alg, int degree, Rng& rng) {
  detail::ExtTable t;
  const std::size_t n = alg->rank();
  if (degree > static_cast<int>(n)) return Form(alg);
  for (int rep = 0; rep < 2; ++rep) {
    IndexMask m = 0;
    while (mask_degree(m) < degree)
      m |= IndexMask(1) << static_cast<IndexMask>(rng.range(0, static_cast<long>(n) - 1));
    detail::table_add(t, m, rng.poly(alg->ring()));
  }
  return Form(alg, std::move(t));
}

namespace {

int lie_sign(int a, int b) { return ((a * b) % 2 == 0) ? 1 : -1; }

}  // namespace

AxiomReport check_gerstenhaber(const AlgebroidPtr& alg, int max_degree, int samples,
                               std::uint64_t seed) {
  AxiomReport rep;
  Rng rng(seed);
  const int n = static_cast<int>(alg->rank());
  const int kmax = std::min(max_degree, n);
  for (int iter = 0; iter < samples; ++iter) {
    int p = static_cast<int>(rng.range(0, kmax));
    int q = static_cast<int>(rng.range(0, kmax));
    int r = static_cast<int>(rng.range(0, kmax));
    Multivector a = random_multivector(alg, p, rng);
    Multivector b = random_multivector(alg, q, rng);
    Multivector c = random_multivector(alg, r, rng);

    if (!(wedge(a, b) == wedge(b, a).scaled(Rational(lie_sign(p, q), 1)))) {
      rep.add({"wedge-graded-commutativity", "degrees (" + std::to_string(p) + "," +
                                                 std::to_string(q) + ") sample " +
                                                 std::to_string(iter),
               wedge(a, b).to_string(), wedge(b, a).to_string()});
    }
    if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)))) {
      rep.add({"wedge-associativity", "sample " + std::to_string(iter),
               wedge(wedge(a, b), c).to_string(), wedge(a, wedge(b, c)).to_string()});
    }
    // Graded antisymmetry in the shifted (Lie) degree.
    Multivector anti = sn_bracket(a, b) +
                       sn_bracket(b, a).scaled(Rational(lie_sign(p - 1, q - 1), 1));
    if (!anti.is_zero()) {
      rep.add({"sn-graded-antisymmetry", "sample " + std::to_string(iter),
               anti.to_string(), "0"});
    }
    // Graded Jacobi with the shift.
    Multivector jac =
        sn_bracket(a, sn_bracket(b, c)).scaled(Rational(lie_sign(p - 1, r - 1), 1)) +
        sn_bracket(b, sn_bracket(c, a)).scaled(Rational(lie_sign(q - 1, p - 1), 1)) +
        sn_bracket(c, sn_bracket(a, b)).scaled(Rational(lie_sign(r - 1, q - 1), 1));
    if (!jac.is_zero()) {
      rep.add({"sn-graded-jacobi", "sample " + std::to_string(iter), jac.to_string(), "0"});
    }
    // [a, b ^ c] = [a,b] ^ c + (-1)^{(p-1)q} b ^ [a,c]
    Multivector leib = sn_bracket(a, wedge(b, c)) - wedge(sn_bracket(a, b), c) -
                       wedge(b, sn_bracket(a, c)).scaled(Rational(lie_sign(p - 1, q), 1));
    if (!leib.is_zero()) {
      rep.add({"sn-leibniz", "sample " + std::to_string(iter), leib.to_string(), "0"});
    }
    if (!rep.passed && rep.violations.size() > 8) break;
  }
  return rep;
}

AxiomReport gerstenhaber_morphism_check(const AlgebroidMorphism& phi, int max_degree,
                                        int samples, std::uint64_t seed) {
  AxiomReport rep;
  Rng rng(seed);
  const int kmax = std::min(max_degree, static_cast<int>(phi.source()->rank()));
  for (int iter = 0; iter < samples; ++iter) {
    int p = static_cast<int>(rng.range(0, kmax));
    int q = static_cast<int>(rng.range(0, kmax));
    Multivector a = random_multivector(phi.source(), p, rng);
    Multivector b = random_multivector(phi.source(), q, rng);
    if (!(apply_morphism(phi, wedge(a, b)) ==
          wedge(apply_morphism(phi, a), apply_morphism(phi, b)))) {
      rep.add({"morphism-wedge", "sample " + std::to_string(iter),
               apply_morphism(phi, wedge(a, b)).to_string(),
               wedge(apply_morphism(phi, a), apply_morphism(phi, b)).to_string()});
    }
    if (!(apply_morphism(phi, sn_bracket(a, b)) ==
          sn_bracket(apply_morphism(phi, a), apply_morphism(phi, b)))) {
      rep.add({"morphism-sn-bracket", "sample " + std::to_string(iter),
               apply_morphism(phi, sn_bracket(a, b)).to_string(),
               sn_bracket(apply_morphism(phi, a), apply_morphism(phi, b)).to_string()});
    }
    if (!rep.passed && rep.violations.size() > 8) break;
  }
  return rep;
}

}  // namespace algk
