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

// Subset lattice of the parties {1..n}: bitmask subsets, up-sets (monotone
// families of nonempty subsets), their minimal generators, enumeration and
// canonicalization under relabeling of the parties.

#pragma once

#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace relcone {

inline constexpr int kMaxParties = 8;
inline constexpr int kMaxEnumerationParties = 5;

// Bit i-1 set <=> party i belongs to the subset.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t bits) : bits_(bits) {}

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains_party(int party) const {
    return party >= 1 && party <= 32 && ((bits_ >> (party - 1)) & 1U) != 0;
  }
  constexpr bool is_subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  int size() const;

  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;

 private:
  std::uint32_t bits_ = 0;
};

// Throws InputError unless 1 <= n <= kMaxParties.
void check_party_count(int n);
// Throws InputError if the mask is zero or has bits at or above position n.
void check_mask(SubsetMask mask, int n);

constexpr std::uint32_t full_bits(int n) { return (1U << n) - 1U; }
inline SubsetMask full_set(int n) { return SubsetMask(full_bits(n)); }

// 1-based party indices, ascending.
std::vector<int> parties_of(SubsetMask mask);
SubsetMask mask_from_parties(std::span<const int> parties, int n);
// "A", "AB", "ACD" ... (parties 1..8 map to A..H).
std::string subset_label(SubsetMask mask);

// All 2^n - 1 nonempty subsets ordered by cardinality, then lexicographically
// by their sorted party lists: A, B, C, AB, AC, BC, ABC for n = 3.
std::vector<SubsetMask> coordinate_order(int n);

class UpSet {
 public:
  // Indexed by mask bits; index 0 (empty set) is never set.
  using Membership = std::bitset<256>;

  // Validates masks and upward closure; throws InputError otherwise.
  static UpSet from_members(std::span<const SubsetMask> members, int n);

  int party_count() const { return n_; }
  bool contains(SubsetMask mask) const { return membership_.test(mask.bits()); }
  std::size_t size() const { return membership_.count(); }
  const Membership& membership() const { return membership_; }
  // Ascending by mask value.
  std::vector<SubsetMask> members() const;
  // 0/1 per subset in coordinate_order(n).
  std::vector<int> indicator() const;
  bool is_subset_of(const UpSet& other) const;

  friend bool operator==(const UpSet& a, const UpSet& b) {
    return a.n_ == b.n_ && a.membership_ == b.membership_;
  }

 private:
  friend UpSet upward_closure(std::span<const SubsetMask> seed, int n);
  friend std::vector<UpSet> enumerate_upsets(int n);
  friend UpSet permute(const UpSet& u, std::span<const int> perm);
  UpSet(int n, Membership membership) : n_(n), membership_(membership) {}

  int n_ = 0;
  Membership membership_;
};

// Orders up-sets by their membership string, reading the bit for mask m as
// the coefficient of 2^(m-1). Negative/zero/positive like strcmp.
int compare_encoding(const UpSet& a, const UpSet& b);

bool is_upset(std::span<const SubsetMask> family, int n);

// Smallest up-set containing every seed mask. Throws InputError on an empty
// seed or invalid mask.
UpSet upward_closure(std::span<const SubsetMask> seed, int n);

// Inclusion-minimal members; ascending by mask value.
std::vector<SubsetMask> minimal_sets(const UpSet& u);

// Every nonempty up-set of nonempty subsets of [n], each once, ordered by
// (member count, encoding). Throws UnsupportedError for n > 5.
std::vector<UpSet> enumerate_upsets(int n);

// perm[i] is the 0-based image of party i+1; perm.size() == n.
SubsetMask permute(SubsetMask mask, std::span<const int> perm);
UpSet permute(const UpSet& u, std::span<const int> perm);

// Orbit member with the least encoding.
UpSet canonical_form(const UpSet& u);

struct OrbitClass {
  UpSet representative;
  // Number of input up-sets falling into this class; the orbit size when the
  // input is a full enumeration.
  std::size_t size = 0;
};

// Groups up-sets by party relabeling. Classes are ordered by their
// representative's indicator string in coordinate order, ascending, with the
// first coordinate most significant.
std::vector<OrbitClass> permutation_classes(std::span<const UpSet> upsets, int n);

}  // namespace relcone
