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
#include "uepbw.hpp"

#include <algorithm>
#include <numeric>

#include "lexer.hpp"
#include "rng.hpp"

namespace algk {

namespace {

void term_add(std::map<Word, Poly>& t, const Word& w, const Poly& p) {
  if (p.is_zero()) return;
  auto it = t.find(w);
  if (it == t.end()) {
    t.emplace(w, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

UEnvElement::UEnvElement(AlgebroidPtr alg, std::map<Word, Poly> terms)
    : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    require_same_ring(it->second.ring(), alg_->ring());
    if (!std::is_sorted(it->first.begin(), it->first.end()))
      throw Error("SemanticError", "enveloping-algebra word is not sorted");
    if (!it->first.empty() && it->first.back() >= alg_->rank())
      throw Error("SemanticError", "generator index out of range");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

UEnvElement UEnvElement::scalar(const AlgebroidPtr& alg, const Poly& f) {
  std::map<Word, Poly> t;
  term_add(t, {}, f);
  return UEnvElement(alg, std::move(t));
}

UEnvElement UEnvElement::one(const AlgebroidPtr& alg) {
  return scalar(alg, Poly::constant(alg->ring(), 1));
}

UEnvElement UEnvElement::generator(const AlgebroidPtr& alg, std::size_t i) {
  std::map<Word, Poly> t;
  t.emplace(Word{static_cast<std::uint32_t>(i)}, Poly::constant(alg->ring(), 1));
  return UEnvElement(alg, std::move(t));
}

std::size_t UEnvElement::filtration_degree() const {
  std::size_t d = 0;
  for (const auto& [w, p] : terms_) {
    (void)p;
    d = std::max(d, w.size());
  }
  return d;
}

UEnvElement UEnvElement::operator+(const UEnvElement& o) const {
  require_same_algebroid(alg_, o.alg_);
  auto t = terms_;
  for (const auto& [w, p] : o.terms_) term_add(t, w, p);
  return UEnvElement(alg_, std::move(t));
}

UEnvElement UEnvElement::operator-(const UEnvElement& o) const {
  require_same_algebroid(alg_, o.alg_);
  auto t = terms_;
  for (const auto& [w, p] : o.terms_) term_add(t, w, -p);
  return UEnvElement(alg_, std::move(t));
}

UEnvElement UEnvElement::scaled(const Poly& f) const {
  std::map<Word, Poly> t;
  for (const auto& [w, p] : terms_) term_add(t, w, p * f);
  return UEnvElement(alg_, std::move(t));
}

UEnvElement UEnvElement::scaled(const Rational& c) const {
  std::map<Word, Poly> t;
  if (!c.is_zero())
    for (const auto& [w, p] : terms_) t.emplace(w, p.scaled(c));
  return UEnvElement(alg_, std::move(t));
}

bool UEnvElement::operator==(const UEnvElement& o) const {
  require_same_algebroid(alg_, o.alg_);
  return terms_ == o.terms_;
}

namespace {

std::string word_string(const std::vector<std::string>& names, const Word& w) {
  std::string s;
  for (auto i : w) {
    if (!s.empty()) s += "*";
    s += names[i];
  }
  return s;
}

std::string element_string(const std::vector<std::string>& names,
                           const std::map<Word, Poly>& terms) {
  if (terms.empty()) return "0";
  std::vector<std::pair<Word, const Poly*>> items;
  for (const auto& [w, p] : terms) items.emplace_back(w, &p);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [w, p] : items) {
    std::string coeff;
    bool negated = false;
    if (p->terms().size() == 1) {
      // Single monomial: render the sign outside.
      Poly abs = p->terms().begin()->second.sign() < 0 ? -*p : *p;
      negated = p->terms().begin()->second.sign() < 0;
      coeff = abs.to_string();
    } else {
      coeff = "(" + p->to_string() + ")";
    }
    std::string mono = word_string(names, w);
    std::string body;
    if (mono.empty())
      body = coeff;
    else if (coeff == "1")
      body = mono;
    else
      body = coeff + "*" + mono;
    if (out.empty())
      out += negated ? "-" + body : body;
    else
      out += (negated ? " - " : " + ") + body;
  }
  return out;
}

// e_k * (normal form X), in normal form.
UEnvElement lmul_gen(std::size_t k, const UEnvElement& x);

// e_k * e_K for a sorted word K, in normal form.
UEnvElement gen_times_word(const AlgebroidPtr& alg, std::size_t k, const Word& kword) {
  if (kword.empty() || k <= kword.front()) {
    Word w;
    w.reserve(kword.size() + 1);
    w.push_back(static_cast<std::uint32_t>(k));
    w.insert(w.end(), kword.begin(), kword.end());
    std::map<Word, Poly> t;
    t.emplace(std::move(w), Poly::constant(alg->ring(), 1));
    return UEnvElement(alg, std::move(t));
  }
  std::size_t j = kword.front();
  Word rest(kword.begin() + 1, kword.end());
  // e_k e_j = e_j e_k + [e_k, e_j]
  UEnvElement out = lmul_gen(j, gen_times_word(alg, k, rest));
  Section c = alg->bracket_basis(k, j);
  for (std::size_t m = 0; m < c.size(); ++m)
    if (!c[m].is_zero()) out = out + gen_times_word(alg, m, rest).scaled(c[m]);
  return out;
}

UEnvElement lmul_gen(std::size_t k, const UEnvElement& x) {
  const AlgebroidPtr& alg = x.algebroid();
  UEnvElement out(alg);
  for (const auto& [w, h] : x.terms()) {
    // e_k h = h e_k + a(e_k)(h)
    out = out + gen_times_word(alg, k, w).scaled(h);
    Poly dh = alg->anchor(k).apply(h);
    if (!dh.is_zero()) {
      std::map<Word, Poly> t;
      term_add(t, w, dh);
      out = out + UEnvElement(alg, std::move(t));
    }
  }
  return out;
}

// Normal form X * e_k, bubbling the generator from the right.
UEnvElement rmul_gen(const UEnvElement& x, std::size_t k);

// e_K * f for a sorted word K (coefficient crossing the whole word).
UEnvElement word_times_scalar(const AlgebroidPtr& alg, const Word& kword, const Poly& f) {
  if (kword.empty()) return UEnvElement::scalar(alg, f);
  std::size_t head = kword.front();
  Word rest(kword.begin() + 1, kword.end());
  // e_head (rest * f)
  return lmul_gen(head, word_times_scalar(alg, rest, f));
}

// e_K * e_k, bubbling from the right.
UEnvElement word_times_gen(const AlgebroidPtr& alg, const Word& kword, std::size_t k) {
  if (kword.empty() || kword.back() <= k) {
    Word w = kword;
    w.push_back(static_cast<std::uint32_t>(k));
    std::map<Word, Poly> t;
    t.emplace(std::move(w), Poly::constant(alg->ring(), 1));
    return UEnvElement(alg, std::move(t));
  }
  std::size_t j = kword.back();
  Word rest(kword.begin(), kword.end() - 1);
  // e_j e_k = e_k e_j + [e_j, e_k]
  UEnvElement out = rmul_gen(word_times_gen(alg, rest, k), j);
  Section c = alg->bracket_basis(j, k);
  for (std::size_t m = 0; m < c.size(); ++m)
    if (!c[m].is_zero()) {
      // rest * c_m * e_m
      UEnvElement mid = word_times_scalar(alg, rest, c[m]);
      out = out + rmul_gen(mid, m);
    }
  return out;
}

UEnvElement rmul_gen(const UEnvElement& x, std::size_t k) {
  const AlgebroidPtr& alg = x.algebroid();
  UEnvElement out(alg);
  for (const auto& [w, h] : x.terms()) out = out + word_times_gen(alg, w, k).scaled(h);
  return out;
}

}  // namespace

UEnvElement ue_mul(const UEnvElement& a, const UEnvElement& b) {
  require_same_algebroid(a.algebroid(), b.algebroid());
  UEnvElement out(a.algebroid());
  for (const auto& [w, f] : a.terms()) {
    UEnvElement acc = b;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = lmul_gen(*it, acc);
    out = out + acc.scaled(f);
  }
  return out;
}

namespace detail {

UEnvElement ue_mul_alt(const UEnvElement& a, const UEnvElement& b) {
  require_same_algebroid(a.algebroid(), b.algebroid());
  const AlgebroidPtr& alg = a.algebroid();
  UEnvElement out(alg);
  for (const auto& [wb, g] : b.terms()) {
    // a * g first, then append b's generators one by one from the left of wb.
    UEnvElement acc(alg);
    for (const auto& [wa, f] : a.terms())
      acc = acc + word_times_scalar(alg, wa, g).scaled(f);
    for (auto i : wb) acc = rmul_gen(acc, i);
    out = out + acc;
  }
  return out;
}

}  // namespace detail

std::string UEnvElement::to_string() const {
  return element_string(alg_->basis_names(), terms_);
}

SymElement::SymElement(AlgebroidPtr alg, std::map<Word, Poly> terms)
    : alg_(std::move(alg)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    require_same_ring(it->second.ring(), alg_->ring());
    if (!std::is_sorted(it->first.begin(), it->first.end()))
      throw Error("SemanticError", "symmetric-algebra multiset key is not sorted");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

SymElement SymElement::scalar(const AlgebroidPtr& alg, const Poly& f) {
  std::map<Word, Poly> t;
  term_add(t, {}, f);
  return SymElement(alg, std::move(t));
}

SymElement SymElement::generator(const AlgebroidPtr& alg, std::size_t i) {
  std::map<Word, Poly> t;
  t.emplace(Word{static_cast<std::uint32_t>(i)}, Poly::constant(alg->ring(), 1));
  return SymElement(alg, std::move(t));
}

std::size_t SymElement::degree() const {
  std::size_t d = 0;
  for (const auto& [w, p] : terms_) {
    (void)p;
    d = std::max(d, w.size());
  }
  return d;
}

SymElement SymElement::operator+(const SymElement& o) const {
  require_same_algebroid(alg_, o.alg_);
  auto t = terms_;
  for (const auto& [w, p] : o.terms_) term_add(t, w, p);
  return SymElement(alg_, std::move(t));
}

SymElement SymElement::operator-(const SymElement& o) const {
  require_same_algebroid(alg_, o.alg_);
  auto t = terms_;
  for (const auto& [w, p] : o.terms_) term_add(t, w, -p);
  return SymElement(alg_, std::move(t));
}

SymElement SymElement::scaled(const Poly& f) const {
  std::map<Word, Poly> t;
  for (const auto& [w, p] : terms_) term_add(t, w, p * f);
  return SymElement(alg_, std::move(t));
}

bool SymElement::operator==(const SymElement& o) const {
  require_same_algebroid(alg_, o.alg_);
  return terms_ == o.terms_;
}

std::string SymElement::to_string() const {
  return element_string(alg_->basis_names(), terms_);
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
  require_same_algebroid(a.algebroid(), b.algebroid());
  std::map<Word, Poly> t;
  for (const auto& [wa, f] : a.terms())
    for (const auto& [wb, g] : b.terms()) {
      Word w;
      w.reserve(wa.size() + wb.size());
      std::merge(wa.begin(), wa.end(), wb.begin(), wb.end(), std::back_inserter(w));
      term_add(t, w, f * g);
    }
  return SymElement(a.algebroid(), std::move(t));
}

SymElement ue_gr(const UEnvElement& a) {
  std::size_t d = a.filtration_degree();
  std::map<Word, Poly> t;
  for (const auto& [w, p] : a.terms())
    if (w.size() == d) t.emplace(w, p);
  return SymElement(a.algebroid(), std::move(t));
}

UEnvElement symmetrize(const SymElement& m) {
  const AlgebroidPtr& alg = m.algebroid();
  UEnvElement out(alg);
  for (const auto& [w, f] : m.terms()) {
    const std::size_t k = w.size();
    if (k == 0) {
      out = out + UEnvElement::scalar(alg, f);
      continue;
    }
    // Average the ordered products over all k! position permutations.
    std::vector<std::size_t> positions(k);
    std::iota(positions.begin(), positions.end(), 0);
    UEnvElement acc(alg);
    long count = 0;
    do {
      UEnvElement prod = UEnvElement::one(alg);
      for (auto it = positions.rbegin(); it != positions.rend(); ++it)
        prod = lmul_gen(w[*it], prod);
      acc = acc + prod;
      ++count;
    } while (std::next_permutation(positions.begin(), positions.end()));
    out = out + acc.scaled(Rational(1, count)).scaled(f);
  }
  return out;
}

UEnvElement ue_apply_morphism(const AlgebroidMorphism& phi, const UEnvElement& a) {
  require_same_algebroid(phi.source(), a.algebroid());
  const AlgebroidPtr& tgt = phi.target();
  // Generator images as degree <= 1 elements of the target.
  std::vector<UEnvElement> images;
  for (std::size_t j = 0; j < phi.source()->rank(); ++j) {
    UEnvElement img(tgt);
    for (std::size_t i = 0; i < tgt->rank(); ++i)
      if (!phi.matrix()[i][j].is_zero())
        img = img + UEnvElement::generator(tgt, i).scaled(phi.matrix()[i][j]);
    images.push_back(std::move(img));
  }
  UEnvElement out(tgt);
  for (const auto& [w, f] : a.terms()) {
    UEnvElement prod = UEnvElement::one(tgt);
    for (auto i : w) prod = ue_mul(prod, images[i]);
    out = out + prod.scaled(f);
  }
  return out;
}

SymElement sym_apply_morphism(const AlgebroidMorphism& phi, const SymElement& a) {
  require_same_algebroid(phi.source(), a.algebroid());
  const AlgebroidPtr& tgt = phi.target();
  std::vector<SymElement> images;
  for (std::size_t j = 0; j < phi.source()->rank(); ++j) {
    SymElement img(tgt);
    for (std::size_t i = 0; i < tgt->rank(); ++i)
      if (!phi.matrix()[i][j].is_zero())
        img = img + SymElement::generator(tgt, i).scaled(phi.matrix()[i][j]);
    images.push_back(std::move(img));
  }
  SymElement out(tgt);
  for (const auto& [w, f] : a.terms()) {
    SymElement prod = SymElement::scalar(tgt, Poly::constant(tgt->ring(), 1));
    for (auto i : w) prod = sym_mul(prod, images[i]);
    out = out + prod.scaled(f);
  }
  return out;
}

namespace {

void enumerate_words(std::size_t rank, std::size_t max_len, Word& cur,
                     std::vector<Word>& out) {
  out.push_back(cur);
  if (cur.size() == max_len || rank == 0) return;
  std::uint32_t start = cur.empty() ? 0 : cur.back();
  for (std::uint32_t i = start; i < rank; ++i) {
    cur.push_back(i);
    enumerate_words(rank, max_len, cur, out);
    cur.pop_back();
  }
}

// Degree-d part of a normal-form element, as a symbol.
SymElement top_part(const UEnvElement& a, std::size_t d) {
  std::map<Word, Poly> t;
  for (const auto& [w, p] : a.terms())
    if (w.size() == d) t.emplace(w, p);
  return SymElement(a.algebroid(), std::move(t));
}

}  // namespace

UeFunctorReport ue_functor_check(const AlgebroidMorphism& phi, int max_degree, int samples,
                                 std::uint64_t seed) {
  UeFunctorReport rep;
  const AlgebroidPtr& src = phi.source();
  Rng rng(seed);
  Word cur;
  std::vector<Word> words;
  enumerate_words(src->rank(), static_cast<std::size_t>(max_degree), cur, words);

  auto elem_of = [&](const Word& w, const Poly& coeff) {
    std::map<Word, Poly> t;
    term_add(t, w, coeff);
    return UEnvElement(src, std::move(t));
  };

  int done = 0;
  for (const auto& wa : words) {
    for (const auto& wb : words) {
      Poly f = done < samples ? rng.poly(src->ring(), 1, 2) + Poly::constant(src->ring(), 1)
                              : Poly::constant(src->ring(), 1);
      Poly g = done < samples ? rng.poly(src->ring(), 1, 2) + Poly::constant(src->ring(), 1)
                              : Poly::constant(src->ring(), 1);
      ++done;
      UEnvElement a = elem_of(wa, f);
      UEnvElement b = elem_of(wb, g);
      UEnvElement lhs = ue_apply_morphism(phi, ue_mul(a, b));
      UEnvElement rhs = ue_mul(ue_apply_morphism(phi, a), ue_apply_morphism(phi, b));
      if (!(lhs == rhs)) {
        rep.algebra_map.add({"ue-functor-algebra-map",
                             "words (" + word_string(src->basis_names(), wa) + ")*(" +
                                 word_string(src->basis_names(), wb) + ")",
                             lhs.to_string(), rhs.to_string()});
      }
    }
  }

  // Graded square: the degree-d symbol of U(phi)(a) equals the symmetric
  // functor applied to the symbol of a.
  for (const auto& wa : words) {
    Poly f = rng.poly(src->ring(), 1, 2) + Poly::constant(src->ring(), 1);
    UEnvElement a = elem_of(wa, f);
    SymElement lhs = top_part(ue_apply_morphism(phi, a), wa.size());
    SymElement rhs = sym_apply_morphism(phi, ue_gr(a));
    if (!(lhs == rhs)) {
      rep.gr_square.add({"ue-functor-gr-square", word_string(src->basis_names(), wa),
                         lhs.to_string(), rhs.to_string()});
    }
  }
  return rep;
}

namespace {

using detail::Lexer;
using detail::Tok;

class UeParser {
 public:
  UeParser(const AlgebroidPtr& alg, const std::string& text) : alg_(alg), lex_(text) {}

  UEnvElement parse() {
    UEnvElement p = expr();
    if (lex_.tok() != Tok::End) lex_.fail("end of input");
    return p;
  }

 private:
  UEnvElement expr() {
    UEnvElement p = term();
    while (lex_.tok() == Tok::Plus || lex_.tok() == Tok::Minus) {
      bool plus = lex_.tok() == Tok::Plus;
      lex_.advance();
      UEnvElement q = term();
      p = plus ? p + q : p - q;
    }
    return p;
  }

  UEnvElement term() {
    UEnvElement p = factor();
    while (true) {
      if (lex_.tok() == Tok::Star) {
        lex_.advance();
        p = ue_mul(p, factor());
      } else if (lex_.tok() == Tok::Slash) {
        throw Error("NonConstantDivisor",
                    "division is only allowed inside rational literals (position " +
                        std::to_string(lex_.pos()) + ")");
      } else {
        break;
      }
    }
    return p;
  }

  UEnvElement factor() {
    UEnvElement b = base();
    if (lex_.tok() == Tok::Caret) {
      lex_.advance();
      if (lex_.tok() != Tok::Number) lex_.fail("exponent");
      std::uint32_t k = static_cast<std::uint32_t>(std::stoul(lex_.value()));
      lex_.advance();
      UEnvElement r = UEnvElement::one(alg_);
      for (std::uint32_t i = 0; i < k; ++i) r = ue_mul(r, b);
      return r;
    }
    return b;
  }

  UEnvElement base() {
    switch (lex_.tok()) {
      case Tok::Number: {
        std::string num = lex_.value();
        lex_.advance();
        if (lex_.tok() == Tok::Slash) {
          lex_.advance();
          if (lex_.tok() != Tok::Number)
            throw Error("NonConstantDivisor",
                        "denominator must be a positive integer (position " +
                            std::to_string(lex_.pos()) + ")");
          std::string den = lex_.value();
          lex_.advance();
          return UEnvElement::scalar(
              alg_, Poly::constant(alg_->ring(), Rational::parse(num + "/" + den)));
        }
        return UEnvElement::scalar(alg_,
                                   Poly::constant(alg_->ring(), Rational::parse(num)));
      }
      case Tok::Ident: {
        const std::string name = lex_.value();
        int bidx = alg_->basis_index(name);
        if (bidx >= 0) {
          lex_.advance();
          return UEnvElement::generator(alg_, static_cast<std::size_t>(bidx));
        }
        int vidx = alg_->ring().var_index(name);
        if (vidx >= 0) {
          lex_.advance();
          return UEnvElement::scalar(
              alg_, Poly::variable(alg_->ring(), static_cast<std::size_t>(vidx)));
        }
        throw Error("UnknownVariable", "unknown variable or generator '" + name + "'");
      }
      case Tok::LParen: {
        lex_.advance();
        UEnvElement p = expr();
        if (lex_.tok() != Tok::RParen) lex_.fail("')'");
        lex_.advance();
        return p;
      }
      case Tok::Minus: {
        lex_.advance();
        return base().scaled(Rational(-1));
      }
      default:
        lex_.fail("number, variable, generator, '(' or '-'");
    }
  }

  const AlgebroidPtr& alg_;
  Lexer lex_;
};

}  // namespace

UEnvElement ue_parse(const AlgebroidPtr& alg, const std::string& text) {
  return UeParser(alg, text).parse();
}

}  // namespace algk
