// Copyright 2026 The motifclust Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MOTIFCLUST_FRACTION_H_
#define MOTIFCLUST_FRACTION_H_

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace motifclust {

// Exact ratio of two 64-bit counts. The denominator is always positive;
// comparisons cross-multiply in 128 bits, so no normalization is needed.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }

  Fraction reduced() const {
    const std::int64_t d = std::gcd(num, den);
    return d == 0 ? *this : Fraction{num / d, den / d};
  }

  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// 1 - f
inline Fraction complement(const Fraction& f) {
  return Fraction{f.den - f.num, f.den};
}

// 1/2 + f/2, the approximation bound for a peeled cluster.
inline Fraction half_plus_half(const Fraction& f) {
  return Fraction{f.den + f.num, 2 * f.den};
}

}  // namespace motifclust

#endif  // MOTIFCLUST_FRACTION_H_
