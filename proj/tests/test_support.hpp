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

// Random generators and independent oracles shared by the test binaries.
// Oracles here work on plain doubles and std::map so they never share a code
// path with the exact-rational implementation they check.

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <vector>

#include "relcone/cone.hpp"
#include "relcone/lattice.hpp"
#include "relcone/states.hpp"

namespace relcone::testing {

using Rng = std::mt19937_64;

// Random layout with one register per party of size in [1, max_alphabet].
inline std::vector<PartyLayout> random_layout(Rng& rng, int n, std::uint64_t max_alphabet) {
  std::uniform_int_distribution<std::uint64_t> size(1, max_alphabet);
  std::vector<PartyLayout> layout(n);
  for (auto& p : layout) p.registers = {size(rng)};
  return layout;
}

inline std::vector<std::vector<std::uint64_t>> all_tuples(const std::vector<PartyLayout>& layout) {
  std::vector<std::vector<std::uint64_t>> out{{}};
  for (const PartyLayout& p : layout) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& prefix : out) {
      for (std::uint64_t s = 0; s < p.alphabet_size(); ++s) {
        auto t = prefix;
        t.push_back(s);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Random exact distribution; each tuple kept with probability keep (at least
// one always kept), integer weights in [1, 12].
inline JointDistribution random_distribution(Rng& rng, const std::vector<PartyLayout>& layout,
                                             double keep = 1.0) {
  std::bernoulli_distribution keep_atom(keep);
  std::uniform_int_distribution<int> weight(1, 12);
  const auto tuples = all_tuples(layout);
  std::vector<std::pair<std::vector<std::uint64_t>, int>> chosen;
  int total = 0;
  for (const auto& t : tuples) {
    if (keep_atom(rng)) {
      const int w = weight(rng);
      chosen.emplace_back(t, w);
      total += w;
    }
  }
  if (chosen.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, tuples.size() - 1);
    chosen.emplace_back(tuples[pick(rng)], 1);
    total = 1;
  }
  std::vector<Atom> atoms;
  for (auto& [t, w] : chosen) atoms.push_back({t, Rational(w, total)});
  return JointDistribution(layout, std::move(atoms));
}

// Pair with sigma of full support, so every relative entropy is finite.
inline StatePair random_finite_pair(Rng& rng, int n, std::uint64_t max_alphabet) {
  auto layout = random_layout(rng, n, max_alphabet);
  std::uniform_real_distribution<double> keep(0.3, 1.0);
  JointDistribution rho = random_distribution(rng, layout, keep(rng));
  JointDistribution sigma = random_distribution(rng, layout, 1.0);
  return StatePair(std::move(rho), std::move(sigma));
}

// Both supports random; infinite entries possible.
inline StatePair random_pair(Rng& rng, int n, std::uint64_t max_alphabet) {
  auto layout = random_layout(rng, n, max_alphabet);
  std::uniform_real_distribution<double> keep(0.3, 1.0);
  JointDistribution rho = random_distribution(rng, layout, keep(rng));
  JointDistribution sigma = random_distribution(rng, layout, keep(rng));
  return StatePair(std::move(rho), std::move(sigma));
}

// "AB" -> mask 0b011.
inline SubsetMask S(const char* label) {
  std::uint32_t bits = 0;
  for (const char* c = label; *c; ++c) bits |= 1U << (*c - 'A');
  return SubsetMask(bits);
}

inline std::vector<SubsetMask> family(std::initializer_list<const char*> labels) {
  std::vector<SubsetMask> out;
  for (const char* l : labels) out.push_back(S(l));
  return out;
}

// ---- double-precision oracles ----

using DoubleDist = std::map<std::vector<std::uint64_t>, double>;

inline DoubleDist to_doubles(const JointDistribution& d) {
  DoubleDist out;
  for (const Atom& a : d.atoms()) out[a.symbols] += a.probability.get_d();
  return out;
}

inline DoubleDist oracle_marginal(const DoubleDist& d, SubsetMask s) {
  DoubleDist out;
  const auto keep = parties_of(s);
  for (const auto& [t, p] : d) {
    std::vector<std::uint64_t> key;
    for (int i : keep) key.push_back(t[i - 1]);
    out[key] += p;
  }
  return out;
}

inline double oracle_relative_entropy(const DoubleDist& p, const DoubleDist& q) {
  double sum = 0.0;
  for (const auto& [t, pv] : p) {
    if (pv <= 0.0) continue;
    auto it = q.find(t);
    if (it == q.end() || it->second <= 0.0) return std::numeric_limits<double>::infinity();
    sum += pv * std::log2(pv / it->second);
  }
  return sum;
}

inline double oracle_entropy(const DoubleDist& p) {
  double h = 0.0;
  for (const auto& [t, pv] : p) {
    if (pv > 0.0) h -= pv * std::log2(pv);
  }
  return h;
}

inline double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Every family of nonempty subsets of [n] that is nonempty and upward
// closed, found by testing all 2^(2^n - 1) families directly.
inline std::size_t brute_force_upset_count(int n) {
  const std::uint32_t subsets = (1U << n) - 1U;
  std::size_t count = 0;
  for (std::uint64_t family = 1; family < (std::uint64_t{1} << subsets); ++family) {
    // Bit (s - 1) of family <=> subset s is a member.
    bool closed = true;
    for (std::uint32_t s = 1; s <= subsets && closed; ++s) {
      if (!((family >> (s - 1)) & 1U)) continue;
      for (std::uint32_t t = 1; t <= subsets; ++t) {
        if ((s & t) == s && !((family >> (t - 1)) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

inline double max_abs_diff(const REVector& a, const REVector& b) {
  double worst = 0.0;
  for (std::uint32_t s = 1; s <= full_bits(a.party_count()); ++s) {
    const Bits x = a.at(SubsetMask(s));
    const Bits y = b.at(SubsetMask(s));
    if (x.is_infinite() || y.is_infinite()) {
      if (x.is_infinite() != y.is_infinite()) return std::numeric_limits<double>::infinity();
      continue;
    }
    worst = std::max(worst, std::abs(x.value() - y.value()));
  }
  return worst;
}

}  // namespace relcone::testing
