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

#include "relcone/cone.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relcone/errors.hpp"

namespace relcone {

Bits Bits::finite(double value) {
  if (std::isnan(value)) throw InputError("NaN entry");
  if (std::isinf(value)) throw InputError("non-finite value passed as finite");
  if (value < 0.0) throw InputError("negative entry " + std::to_string(value));
  return Bits(value, false);
}

bool less_than(Bits a, Bits b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

REVector::REVector(int n) : n_(n) {
  check_party_count(n);
  entries_.assign(full_bits(n), Bits{});
}

Bits REVector::at(SubsetMask s) const {
  check_mask(s, n_);
  return entries_[s.bits() - 1];
}

void REVector::set(SubsetMask s, Bits value) {
  check_mask(s, n_);
  entries_[s.bits() - 1] = value;
}

bool REVector::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](Bits b) { return b.is_finite(); });
}

std::vector<Bits> REVector::ordered() const {
  std::vector<Bits> out;
  for (SubsetMask s : coordinate_order(n_)) out.push_back(at(s));
  return out;
}

REVector REVector::from_ordered(int n, const std::vector<double>& values) {
  REVector v(n);
  const auto order = coordinate_order(n);
  if (values.size() != order.size()) {
    throw InputError("expected " + std::to_string(order.size()) + " entries, got " +
                     std::to_string(values.size()));
  }
  for (std::size_t i = 0; i < order.size(); ++i) v.set(order[i], Bits::finite(values[i]));
  return v;
}

REVector REVector::indicator(const UpSet& u, double scale) {
  REVector v(u.party_count());
  for (SubsetMask s : u.members()) v.set(s, Bits::finite(scale));
  return v;
}

MembershipReport check_membership(const REVector& v) {
  MembershipReport report;
  const int n = v.party_count();
  const std::uint32_t full = full_bits(n);
  std::vector<SubsetMask> infinite;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (v.at(SubsetMask(s)).is_infinite()) infinite.emplace_back(s);
  }
  report.infinite_part_ok = infinite.empty() || is_upset(infinite, n);

  for (std::uint32_t big = 1; big <= full; ++big) {
    const Bits vb = v.at(SubsetMask(big));
    if (vb.is_infinite()) continue;
    // Proper nonempty submasks of big.
    for (std::uint32_t small = (big - 1) & big; small != 0; small = (small - 1) & big) {
      const Bits vs = v.at(SubsetMask(small));
      if (vs.is_infinite()) continue;
      if (vb.value() < vs.value()) {
        report.violations.push_back(
            {SubsetMask(big), SubsetMask(small), vb.value(), vs.value()});
      }
    }
  }
  report.member = report.violations.empty() && report.infinite_part_ok;
  return report;
}

namespace {

// Distinct positive levels, descending, after merging values within the
// relative tolerance of the level's largest value.
std::vector<double> distinct_levels(const REVector& v) {
  std::vector<double> values;
  for (std::uint32_t s = 1; s <= full_bits(v.party_count()); ++s) {
    const double x = v.at(SubsetMask(s)).value();
    if (x > 0.0) values.push_back(x);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<double> levels;
  for (double x : values) {
    if (levels.empty() || x < levels.back() * (1.0 - kLevelMergeTolerance)) {
      levels.push_back(x);
    }
  }
  return levels;
}

// Level index of x: the level it was merged into, or -1 for zero.
int level_of(double x, const std::vector<double>& levels) {
  if (x <= 0.0) return -1;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (x >= levels[i] * (1.0 - kLevelMergeTolerance)) return static_cast<int>(i);
  }
  return static_cast<int>(levels.size()) - 1;
}

}  // namespace

RayDecomposition layer_cake_decompose(const REVector& v) {
  if (!v.all_finite()) {
    throw UnsupportedError("decomposition is defined for finite vectors only");
  }
  if (!check_membership(v).member) throw DomainError("vector violates monotonicity");

  const int n = v.party_count();
  const auto levels = distinct_levels(v);
  RayDecomposition d;
  d.n = n;
  UpSet::Membership acc;
  std::vector<int> level_index(full_bits(n) + 1, -1);
  for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
    level_index[s] = level_of(v.at(SubsetMask(s)).value(), levels);
  }
  for (std::size_t i = 0; i < levels.size(); ++i) {
    std::vector<SubsetMask> members;
    for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
      if (level_index[s] >= 0 && level_index[s] <= static_cast<int>(i)) {
        members.emplace_back(s);
      }
    }
    const double next = i + 1 < levels.size() ? levels[i + 1] : 0.0;
    // Merged levels can break closure only if monotonicity was violated within
    // the merge tolerance; from_members rejects that.
    d.terms.push_back({levels[i] - next, UpSet::from_members(members, n)});
  }
  return d;
}

REVector recompose(const RayDecomposition& d) {
  REVector v(d.n);
  std::vector<double> sums(full_bits(d.n) + 1, 0.0);
  for (const RayTerm& t : d.terms) {
    if (t.upset.party_count() != d.n) throw InputError("term party count mismatch");
    for (SubsetMask s : t.upset.members()) sums[s.bits()] += t.coefficient;
  }
  for (std::uint32_t s = 1; s <= full_bits(d.n); ++s) {
    v.set(SubsetMask(s), Bits::finite(sums[s]));
  }
  return v;
}

std::vector<UpSet> level_sets(const REVector& v) {
  std::vector<double> thresholds;
  for (std::uint32_t s = 1; s <= full_bits(v.party_count()); ++s) {
    const Bits b = v.at(SubsetMask(s));
    if (b.is_finite() && b.value() > 0.0) thresholds.push_back(b.value());
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
  std::vector<UpSet> out;
  for (double t : thresholds) {
    std::vector<SubsetMask> members;
    for (std::uint32_t s = 1; s <= full_bits(v.party_count()); ++s) {
      const Bits b = v.at(SubsetMask(s));
      if (b.is_infinite() || b.value() >= t) members.emplace_back(s);
    }
    out.push_back(UpSet::from_members(members, v.party_count()));
  }
  return out;
}

}  // namespace relcone
