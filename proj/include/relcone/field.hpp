/*
   Copyright 2026 The relcone Authors

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

// Arithmetic in the prime field GF(p) for small p.

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace relcone {

bool is_prime(std::uint32_t p);
// Smallest prime strictly greater than m.
std::uint32_t next_prime_above(std::uint32_t m);

class FieldElement {
 public:
  // Reduces value mod p; throws ParameterError if p is not prime.
  FieldElement(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }

  FieldElement operator+(FieldElement o) const;
  FieldElement operator-(FieldElement o) const;
  FieldElement operator*(FieldElement o) const;
  FieldElement operator-() const;
  // Throws ParameterError on zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(FieldElement, FieldElement) = default;

 private:
  struct Unchecked {};
  FieldElement(Unchecked, std::uint32_t v, std::uint32_t p) : value_(v), p_(p) {}
  void same_field(FieldElement o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

// Horner evaluation of sum coeffs[i] x^i.
FieldElement evaluate(std::span<const FieldElement> coeffs, FieldElement x);

// Value at 0 of the unique polynomial of degree < points.size() through the
// given (x, y) pairs. x values must be distinct.
FieldElement interpolate_at_zero(std::span<const std::pair<FieldElement, FieldElement>> points);

}  // namespace relcone
