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

#include "relcone/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "relcone/errors.hpp"

namespace relcone {

int SubsetMask::size() const { return std::popcount(bits_); }

void check_party_count(int n) {
  if (n < 1 || n > kMaxParties) {
    throw InputError("party count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxParties) + "]");
  }
}

void check_mask(SubsetMask mask, int n) {
  check_party_count(n);
  if (mask.bits() == 0) throw InputError("empty subset is not a coordinate");
  if (mask.bits() > full_bits(n)) {
    throw InputError("subset mask " + std::to_string(mask.bits()) +
                     " exceeds party count " + std::to_string(n));
  }
}

std::vector<int> parties_of(SubsetMask mask) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i) {
    if ((mask.bits() >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

SubsetMask mask_from_parties(std::span<const int> parties, int n) {
  check_party_count(n);
  std::uint32_t bits = 0;
  for (int p : parties) {
    if (p < 1 || p > n) {
      throw InputError("party index " + std::to_string(p) + " outside [1, " +
                       std::to_string(n) + "]");
    }
    const std::uint32_t bit = 1U << (p - 1);
    if (bits & bit) throw InputError("duplicate party index " + std::to_string(p));
    bits |= bit;
  }
  SubsetMask mask(bits);
  check_mask(mask, n);
  return mask;
}

std::string subset_label(SubsetMask mask) {
  std::string label;
  for (int p : parties_of(mask)) label.push_back(static_cast<char>('A' + p - 1));
  return label;
}

std::vector<SubsetMask> coordinate_order(int n) {
  check_party_count(n);
  std::vector<SubsetMask> order;
  order.reserve(full_bits(n));
  for (std::uint32_t b = 1; b <= full_bits(n); ++b) order.emplace_back(b);
  std::sort(order.begin(), order.end(), [](SubsetMask a, SubsetMask b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return parties_of(a) < parties_of(b);
  });
  return order;
}

namespace {

UpSet::Membership membership_of(std::span<const SubsetMask> family, int n) {
  UpSet::Membership m;
  for (SubsetMask s : family) {
    check_mask(s, n);
    m.set(s.bits());
  }
  return m;
}

bool is_closed(const UpSet::Membership& m, int n) {
  const std::uint32_t full = full_bits(n);
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (!m.test(s)) continue;
    for (int i = 0; i < n; ++i) {
      if (!m.test(s | (1U << i))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<SubsetMask> UpSet::members() const {
  std::vector<SubsetMask> out;
  for (std::uint32_t s = 1; s <= full_bits(n_); ++s) {
    if (membership_.test(s)) out.emplace_back(s);
  }
  return out;
}

std::vector<int> UpSet::indicator() const {
  std::vector<int> out;
  for (SubsetMask s : coordinate_order(n_)) out.push_back(contains(s) ? 1 : 0);
  return out;
}

bool UpSet::is_subset_of(const UpSet& other) const {
  return n_ == other.n_ && (membership_ & ~other.membership_).none();
}

UpSet UpSet::from_members(std::span<const SubsetMask> members, int n) {
  if (!is_upset(members, n)) throw InputError("family is not a nonempty up-set");
  return UpSet(n, membership_of(members, n));
}

int compare_encoding(const UpSet& a, const UpSet& b) {
  for (int i = 255; i >= 1; --i) {
    const bool x = a.membership().test(i);
    const bool y = b.membership().test(i);
    if (x != y) return x ? 1 : -1;
  }
  return 0;
}

bool is_upset(std::span<const SubsetMask> family, int n) {
  const auto m = membership_of(family, n);
  return m.any() && is_closed(m, n);
}

UpSet upward_closure(std::span<const SubsetMask> seed, int n) {
  if (seed.empty()) throw InputError("upward closure of an empty seed");
  for (SubsetMask t : seed) check_mask(t, n);
  UpSet::Membership m;
  for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
    for (SubsetMask t : seed) {
      if (t.is_subset_of(SubsetMask(s))) {
        m.set(s);
        break;
      }
    }
  }
  return UpSet(n, m);
}

std::vector<SubsetMask> minimal_sets(const UpSet& u) {
  std::vector<SubsetMask> out;
  for (SubsetMask s : u.members()) {
    bool minimal = true;
    for (int i = 0; i < u.party_count() && minimal; ++i) {
      const std::uint32_t bit = 1U << i;
      if ((s.bits() & bit) && s.bits() != bit && u.contains(SubsetMask(s.bits() & ~bit))) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

namespace {

void extend(std::span<const SubsetMask> order, std::size_t idx, int n,
            UpSet::Membership& current, std::vector<UpSet::Membership>& out) {
  if (idx == order.size()) {
    if (current.any()) out.push_back(current);
    return;
  }
  extend(order, idx + 1, n, current, out);
  // Supersets have larger cardinality and were decided earlier.
  const std::uint32_t s = order[idx].bits();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1U << i;
    if (!(s & bit) && !current.test(s | bit)) return;
  }
  current.set(s);
  extend(order, idx + 1, n, current, out);
  current.reset(s);
}

}  // namespace

std::vector<UpSet> enumerate_upsets(int n) {
  check_party_count(n);
  if (n > kMaxEnumerationParties) {
    throw UnsupportedError("up-set enumeration is limited to n <= " +
                           std::to_string(kMaxEnumerationParties));
  }
  std::vector<SubsetMask> order;
  for (std::uint32_t s = 1; s <= full_bits(n); ++s) order.emplace_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [](SubsetMask a, SubsetMask b) { return a.size() > b.size(); });

  std::vector<UpSet::Membership> families;
  UpSet::Membership current;
  extend(order, 0, n, current, families);

  std::vector<UpSet> out;
  out.reserve(families.size());
  for (const auto& m : families) out.push_back(UpSet(n, m));
  std::sort(out.begin(), out.end(), [](const UpSet& a, const UpSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return compare_encoding(a, b) < 0;
  });
  return out;
}

SubsetMask permute(SubsetMask mask, std::span<const int> perm) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if ((mask.bits() >> i) & 1U) out |= 1U << perm[i];
  }
  return SubsetMask(out);
}

UpSet permute(const UpSet& u, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != u.party_count()) {
    throw InputError("permutation size does not match party count");
  }
  UpSet::Membership m;
  for (SubsetMask s : u.members()) m.set(permute(s, perm).bits());
  return UpSet(u.party_count(), m);
}

UpSet canonical_form(const UpSet& u) {
  std::vector<int> perm(u.party_count());
  std::iota(perm.begin(), perm.end(), 0);
  UpSet best = u;
  do {
    UpSet image = permute(u, perm);
    if (compare_encoding(image, best) < 0) best = image;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<OrbitClass> permutation_classes(std::span<const UpSet> upsets, int n) {
  check_party_count(n);
  std::vector<OrbitClass> classes;
  for (const UpSet& u : upsets) {
    if (u.party_count() != n) throw InputError("up-sets have mixed party counts");
    UpSet rep = canonical_form(u);
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const OrbitClass& c) { return c.representative == rep; });
    if (it == classes.end()) {
      classes.push_back({std::move(rep), 1});
    } else {
      ++it->size;
    }
  }
  std::sort(classes.begin(), classes.end(), [](const OrbitClass& a, const OrbitClass& b) {
    return a.representative.indicator() < b.representative.indicator();
  });
  return classes;
}

}  // namespace relcone
