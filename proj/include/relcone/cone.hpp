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

// Vectors indexed by nonempty subsets, the monotonicity cone they should lie
// in, and the nested layer-cake decomposition of cone members into
// up-set indicator rays.

#pragma once

#include <cstddef>
#include <vector>

#include "relcone/lattice.hpp"

namespace relcone {

// Nonnegative extended real in bits: a finite double or +infinity.
class Bits {
 public:
  constexpr Bits() = default;
  // Throws InputError on NaN, negative or non-finite input.
  static Bits finite(double value);
  static constexpr Bits infinity() { return Bits(0.0, true); }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Only meaningful when finite.
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(Bits, Bits) = default;

 private:
  constexpr Bits(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_ = 0.0;
  bool infinite_ = false;
};

// Orders +inf above every finite value.
bool less_than(Bits a, Bits b);

class REVector {
 public:
  explicit REVector(int n);  // zero vector

  int party_count() const { return n_; }
  std::size_t dimension() const { return entries_.size(); }

  Bits at(SubsetMask s) const;
  void set(SubsetMask s, Bits value);
  bool all_finite() const;

  // Entries in coordinate_order(n).
  std::vector<Bits> ordered() const;
  // Builds from values listed in coordinate_order(n); finite values only.
  static REVector from_ordered(int n, const std::vector<double>& values);
  static REVector indicator(const UpSet& u, double scale = 1.0);

  friend bool operator==(const REVector&, const REVector&) = default;

 private:
  int n_;
  std::vector<Bits> entries_;  // index mask - 1
};

struct Violation {
  SubsetMask superset;
  SubsetMask subset;
  double superset_value;
  double subset_value;
};

struct MembershipReport {
  bool member = false;
  std::vector<Violation> violations;
  bool infinite_part_ok = true;
};

// Exhaustive over all comparable pairs S ⊋ S' with finite entries.
MembershipReport check_membership(const REVector& v);

struct RayTerm {
  double coefficient;
  UpSet upset;
};

// Terms innermost (smallest up-set) first, up-sets strictly nested.
struct RayDecomposition {
  int n = 0;
  std::vector<RayTerm> terms;
};

// Relative tolerance under which distinct entries are treated as one level.
inline constexpr double kLevelMergeTolerance = 1e-12;

// Throws UnsupportedError for infinite entries and DomainError for
// non-members.
RayDecomposition layer_cake_decompose(const REVector& v);
REVector recompose(const RayDecomposition& d);

// Every threshold level set {S : v_S >= t} of v; used by property suites.
std::vector<UpSet> level_sets(const REVector& v);

}  // namespace relcone
