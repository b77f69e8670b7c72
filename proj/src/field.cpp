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

#include "relcone/field.hpp"

#include <string>

#include "relcone/errors.hpp"

namespace relcone {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t next_prime_above(std::uint32_t m) {
  std::uint32_t p = m + 1;
  while (!is_prime(p)) ++p;
  return p;
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  const std::int64_t r = value % static_cast<std::int64_t>(p);
  value_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

void FieldElement::same_field(FieldElement o) const {
  if (o.p_ != p_) throw ParameterError("mixed field moduli");
}

FieldElement FieldElement::operator+(FieldElement o) const {
  same_field(o);
  return {Unchecked{}, static_cast<std::uint32_t>((std::uint64_t{value_} + o.value_) % p_), p_};
}

FieldElement FieldElement::operator-(FieldElement o) const { return *this + (-o); }

FieldElement FieldElement::operator*(FieldElement o) const {
  same_field(o);
  return {Unchecked{}, static_cast<std::uint32_t>((std::uint64_t{value_} * o.value_) % p_), p_};
}

FieldElement FieldElement::operator-() const {
  return {Unchecked{}, value_ == 0 ? 0 : p_ - value_, p_};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result(Unchecked{}, 1 % p_, p_);
  FieldElement base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw ParameterError("inverse of zero");
  return pow(p_ - 2);  // Fermat
}

FieldElement evaluate(std::span<const FieldElement> coeffs, FieldElement x) {
  FieldElement acc(0, x.modulus());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

FieldElement interpolate_at_zero(
    std::span<const std::pair<FieldElement, FieldElement>> points) {
  if (points.empty()) throw ParameterError("interpolation needs at least one point");
  const std::uint32_t p = points.front().first.modulus();
  FieldElement acc(0, p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Lagrange basis l_i(0) = prod_{j != i} x_j / (x_j - x_i).
    FieldElement num(1, p);
    FieldElement den(1, p);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      num = num * points[j].first;
      den = den * (points[j].first - points[i].first);
    }
    if (den.value() == 0) throw ParameterError("duplicate interpolation abscissa");
    acc = acc + points[i].second * num * den.inverse();
  }
  return acc;
}

}  // namespace relcone
