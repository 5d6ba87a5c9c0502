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
#include "poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lexer.hpp"

namespace algk {

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

PolyRing PolyRing::create(std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw Error("SemanticError", "invalid variable name '" + v + "'");
    if (!seen.insert(v).second)
      throw Error("DuplicateVariable", "variable '" + v + "' declared twice");
  }
  return PolyRing(std::make_shared<const std::vector<std::string>>(std::move(vars)));
}

int PolyRing::var_index(const std::string& name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i] == name) return static_cast<int>(i);
  return -1;
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (a != b) throw Error("RingMismatch", "operands live in different polynomial rings");
}

void Poly::insert_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::constant(const PolyRing& ring, const Rational& c) {
  Poly p(ring);
  p.insert_term(Exponents(ring.var_count(), 0), c);
  return p;
}

Poly Poly::variable(const PolyRing& ring, std::size_t index) {
  Exponents e(ring.var_count(), 0);
  e.at(index) = 1;
  return monomial(ring, std::move(e), 1);
}

Poly Poly::monomial(const PolyRing& ring, Exponents e, const Rational& c) {
  if (e.size() != ring.var_count())
    throw Error("SemanticError", "exponent vector length mismatch");
  Poly p(ring);
  p.insert_term(e, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t k) { return k == 0; });
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("SemanticError", "polynomial is not constant");
  return terms_.begin()->second;
}

Poly poly_add_impl(const Poly& a, const Poly& b, int sign) {
  require_same_ring(a.ring(), b.ring());
  Poly r = a;
  for (const auto& [e, c] : b.terms()) r.insert_term(e, sign < 0 ? -c : c);
  return r;
}

Poly Poly::operator+(const Poly& o) const { return poly_add_impl(*this, o, +1); }
Poly Poly::operator-(const Poly& o) const { return poly_add_impl(*this, o, -1); }

Poly Poly::operator-() const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  Poly r(ring_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Poly Poly::pow(std::uint32_t k) const {
  Poly r = Poly::constant(ring_, 1);
  for (std::uint32_t i = 0; i < k; ++i) r = r * *this;
  return r;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.insert_term(d, c * Rational(static_cast<long>(e[var])));
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (point.size() != ring_.var_count())
    throw Error("SemanticError", "evaluation point has wrong dimension");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Rational p = 1;
      for (std::uint32_t k = 0; k < e[i]; ++k) p *= point[i];
      m *= p;
    }
    acc += m;
  }
  return acc;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  }
  return d;
}

long monomial_weight(const Exponents& e, const std::vector<int>& var_weights) {
  long w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<long>(e[i]) * var_weights[i];
  return w;
}

std::optional<long> Poly::homogeneous_weight(const std::vector<int>& var_weights) const {
  std::optional<long> w;
  for (const auto& [e, c] : terms_) {
    (void)c;
    long mw = monomial_weight(e, var_weights);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

bool Poly::is_homogeneous_of_weight(long w, const std::vector<int>& var_weights) const {
  for (const auto& [e, c] : terms_) {
    (void)c;
    if (monomial_weight(e, var_weights) != w) return false;
  }
  return true;
}

namespace {

// Graded-lex order, descending, for canonical printing.
std::vector<std::pair<Exponents, Rational>> sorted_terms_grlex(const Poly& p) {
  std::vector<std::pair<Exponents, Rational>> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    auto da = std::accumulate(a.first.begin(), a.first.end(), 0u);
    auto db = std::accumulate(b.first.begin(), b.first.end(), 0u);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return ts;
}

std::string monomial_string(const PolyRing& ring, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms_grlex(*this)) {
    Rational a = c.abs();
    bool neg = c.sign() < 0;
    // In the published grammar '-' binds the whole base, so a leading
    // "-x^4" would reparse as (-x)^4; spell the coefficient out whenever the
    // unary minus would capture an exponentiated first factor.
    bool unary_minus = first && neg;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = monomial_string(ring_, e);
    bool leading_power = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      leading_power = e[i] > 1;
      break;
    }
    if (mono.empty()) {
      out += a.to_string();
    } else if (a.is_one() && !(unary_minus && leading_power)) {
      out += mono;
    } else {
      out += a.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace {

using detail::Lexer;
using detail::Tok;

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, const std::string& text) : ring_(ring), lex_(text) {}

  Poly parse() {
    Poly p = expr();
    if (lex_.tok() != Tok::End) lex_.fail("end of input");
    return p;
  }

 private:
  Poly expr() {
    Poly p = term();
    while (lex_.tok() == Tok::Plus || lex_.tok() == Tok::Minus) {
      bool plus = lex_.tok() == Tok::Plus;
      lex_.advance();
      Poly q = term();
      p = plus ? p + q : p - q;
    }
    return p;
  }

  Poly term() {
    Poly p = factor();
    while (true) {
      if (lex_.tok() == Tok::Star) {
        lex_.advance();
        p = p * factor();
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

  Poly factor() {
    Poly b = base();
    if (lex_.tok() == Tok::Caret) {
      lex_.advance();
      if (lex_.tok() != Tok::Number) lex_.fail("exponent");
      std::uint32_t k = static_cast<std::uint32_t>(std::stoul(lex_.value()));
      lex_.advance();
      return b.pow(k);
    }
    return b;
  }

  Poly base() {
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
          return Poly::constant(ring_, Rational::parse(num + "/" + den));
        }
        return Poly::constant(ring_, Rational::parse(num));
      }
      case Tok::Ident: {
        int idx = ring_.var_index(lex_.value());
        if (idx < 0) throw Error("UnknownVariable", "unknown variable '" + lex_.value() + "'");
        lex_.advance();
        return Poly::variable(ring_, static_cast<std::size_t>(idx));
      }
      case Tok::LParen: {
        lex_.advance();
        Poly p = expr();
        if (lex_.tok() != Tok::RParen) lex_.fail("')'");
        lex_.advance();
        return p;
      }
      case Tok::Minus: {
        lex_.advance();
        return -base();
      }
      default:
        lex_.fail("number, variable, '(' or '-'");
    }
  }

  const PolyRing& ring_;
  Lexer lex_;
};

}  // namespace

Poly Poly::parse(const PolyRing& ring, const std::string& text) {
  return PolyParser(ring, text).parse();
}

namespace {

// Graded-lex leading term.
std::map<Exponents, Rational>::const_iterator leading_term(const Poly& p) {
  auto best = p.terms().begin();
  auto db = std::accumulate(best->first.begin(), best->first.end(), 0u);
  for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it) {
    auto d = std::accumulate(it->first.begin(), it->first.end(), 0u);
    if (d > db || (d == db && it->first > best->first)) {
      best = it;
      db = d;
    }
  }
  return best;
}

}  // namespace

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
  Poly r = a;
  Poly q(a.ring());
  auto ltb = leading_term(b);
  while (!r.is_zero()) {
    auto ltr = leading_term(r);
    Exponents e(ltr->first.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (ltr->first[i] < ltb->first[i]) return std::nullopt;
      e[i] = ltr->first[i] - ltb->first[i];
    }
    Poly t = Poly::monomial(a.ring(), e, ltr->second / ltb->second);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

Derivation::Derivation(PolyRing ring)
    : ring_(ring), components_(ring.var_count(), Poly(ring)) {}

Derivation::Derivation(PolyRing ring, std::vector<Poly> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  if (components_.size() != ring_.var_count())
    throw Error("SemanticError", "derivation component count mismatch");
  for (const auto& c : components_) require_same_ring(c.ring(), ring_);
}

Derivation Derivation::coordinate(const PolyRing& ring, std::size_t j) {
  std::vector<Poly> comps(ring.var_count(), Poly(ring));
  comps.at(j) = Poly::constant(ring, 1);
  return Derivation(ring, std::move(comps));
}

bool Derivation::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

Poly Derivation::apply(const Poly& f) const {
  require_same_ring(ring_, f.ring());
  Poly r(ring_);
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].is_zero()) continue;
    r = r + components_[j] * f.derivative(j);
  }
  return r;
}

Derivation Derivation::operator+(const Derivation& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Poly> comps;
  comps.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j)
    comps.push_back(components_[j] + o.components_[j]);
  return Derivation(ring_, std::move(comps));
}

Derivation Derivation::operator-(const Derivation& o) const {
  require_same_ring(ring_, o.ring_);
  std::vector<Poly> comps;
  comps.reserve(components_.size());
  for (std::size_t j = 0; j < components_.size(); ++j)
    comps.push_back(components_[j] - o.components_[j]);
  return Derivation(ring_, std::move(comps));
}

Derivation Derivation::scaled(const Poly& f) const {
  std::vector<Poly> comps;
  comps.reserve(components_.size());
  for (const auto& c : components_) comps.push_back(c * f);
  return Derivation(ring_, std::move(comps));
}

Derivation Derivation::commutator(const Derivation& a, const Derivation& b) {
  require_same_ring(a.ring_, b.ring_);
  std::vector<Poly> comps;
  comps.reserve(a.components_.size());
  for (std::size_t j = 0; j < a.components_.size(); ++j)
    comps.push_back(a.apply(b.components_[j]) - b.apply(a.components_[j]));
  return Derivation(a.ring_, std::move(comps));
}

std::string Derivation::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (components_[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components_[j].to_string() + ")*d/d" + ring_.var_name(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace algk
