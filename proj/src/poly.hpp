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
#ifndef ALGK_POLY_HPP
#define ALGK_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace algk {

// Ordered list of distinct variable names. Value semantics; two rings are
// the same ring iff their variable lists coincide.
class PolyRing {
 public:
  PolyRing() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  // Validates the identifier grammar [a-zA-Z][a-zA-Z0-9_]* and uniqueness.
  static PolyRing create(std::vector<std::string> vars);

  std::size_t var_count() const { return vars_->size(); }
  const std::vector<std::string>& vars() const { return *vars_; }
  const std::string& var_name(std::size_t i) const { return (*vars_)[i]; }
  // -1 if the name is not a ring variable.
  int var_index(const std::string& name) const;

  bool operator==(const PolyRing& o) const {
    return vars_ == o.vars_ || *vars_ == *o.vars_;
  }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

 private:
  explicit PolyRing(std::shared_ptr<const std::vector<std::string>> v) : vars_(std::move(v)) {}
  std::shared_ptr<const std::vector<std::string>> vars_;
};

bool is_identifier(const std::string& s);

// One exponent per ring variable.
using Exponents = std::vector<std::uint32_t>;

// Exact multivariate polynomial over the rationals, canonical form:
// no zero coefficients are stored, term keys are dense exponent vectors.
class Poly {
 public:
  Poly() = default;
  explicit Poly(PolyRing ring) : ring_(std::move(ring)) {}

  static Poly constant(const PolyRing& ring, const Rational& c);
  static Poly variable(const PolyRing& ring, std::size_t index);
  static Poly monomial(const PolyRing& ring, Exponents e, const Rational& c);
  static Poly parse(const PolyRing& ring, const std::string& text);

  const PolyRing& ring() const { return ring_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Zero for the zero polynomial.
  Rational constant_value() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rational& c) const;
  Poly pow(std::uint32_t k) const;
  bool operator==(const Poly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly derivative(std::size_t var) const;
  Rational eval(const std::vector<Rational>& point) const;

  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  // Weight of a monomial under per-variable weights; the polynomial is
  // homogeneous iff all monomials share one weight. Zero poly: homogeneous
  // of every weight (returns nullopt but is_homogeneous_of_weight is true).
  std::optional<long> homogeneous_weight(const std::vector<int>& var_weights) const;
  bool is_homogeneous_of_weight(long w, const std::vector<int>& var_weights) const;

  // Graded-lex (total degree, then exponent order) descending; reparses to
  // the same polynomial.
  std::string to_string() const;

 private:
  void insert_term(const Exponents& e, const Rational& c);
  PolyRing ring_;
  std::map<Exponents, Rational> terms_;

  friend Poly poly_add_impl(const Poly& a, const Poly& b, int sign);
};

// Exact single-divisor division: returns q with a = q*b, or nullopt when no
// such q exists in the ring. Throws DivisionByZero when b = 0.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

void require_same_ring(const PolyRing& a, const PolyRing& b);

long monomial_weight(const Exponents& e, const std::vector<int>& var_weights);

// K-linear derivation of the ring, D = sum components[j] * d/dx_j.
class Derivation {
 public:
  explicit Derivation(PolyRing ring);
  Derivation(PolyRing ring, std::vector<Poly> components);

  static Derivation coordinate(const PolyRing& ring, std::size_t j);  // d/dx_j

  const PolyRing& ring() const { return ring_; }
  const std::vector<Poly>& components() const { return components_; }
  bool is_zero() const;

  Poly apply(const Poly& f) const;

  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  Derivation scaled(const Poly& f) const;
  bool operator==(const Derivation& o) const {
    return ring_ == o.ring_ && components_ == o.components_;
  }

  // Commutator [a, b] = a o b - b o a, again a derivation.
  static Derivation commutator(const Derivation& a, const Derivation& b);

  std::string to_string() const;

 private:
  PolyRing ring_;
  std::vector<Poly> components_;
};

}  // namespace algk

#endif
