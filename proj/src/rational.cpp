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
#include "rational.hpp"

namespace algk {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpq_class(mpz_class(text)));
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw Error("DivisionByZero", "rational with zero denominator");
    if (den < 0) throw Error("SyntaxError", "denominator must be positive in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw Error("SyntaxError", "invalid rational literal '" + text + "'");
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw Error("DivisionByZero", "rational division by zero");
  return Rational(mpq_class(v_ / o.v_));
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace algk
