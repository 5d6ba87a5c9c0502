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
#ifndef ALGK_RNG_HPP
#define ALGK_RNG_HPP

#include <cstdint>

#include "poly.hpp"

namespace algk {

// Deterministic splitmix64 stream; identical across platforms so seeded runs
// are byte-for-byte reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(long max_abs_num = 5, long max_den = 3) {
    long den = range(1, max_den);
    return Rational(range(-max_abs_num, max_abs_num), den);
  }

  // Sparse random polynomial with small exponents and coefficients.
  Poly poly(const PolyRing& ring, std::uint32_t max_deg = 2, int max_terms = 3) {
    Poly p(ring);
    int terms = static_cast<int>(range(0, max_terms));
    for (int t = 0; t < terms; ++t) {
      Exponents e(ring.var_count(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<std::uint32_t>(range(0, max_deg));
      p = p + Poly::monomial(ring, e, rational());
    }
    return p;
  }

 private:
  std::uint64_t s_;
};

}  // namespace algk

#endif
