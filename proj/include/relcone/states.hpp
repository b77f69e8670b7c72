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

// Exact classical joint distributions over n party registers (diagonal
// density matrices in a product basis), together with marginals, mixtures,
// tensor products and (relative) entropies in bits.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relcone/cone.hpp"
#include "relcone/lattice.hpp"

namespace relcone {

using Rational = mpq_class;

// A party's share of the product alphabet. A party may hold several
// registers; its symbol is their mixed-radix code, first register most
// significant.
struct PartyLayout {
  std::vector<std::uint64_t> registers;  // alphabet size per register, each >= 1

  std::uint64_t alphabet_size() const;
  std::vector<std::uint64_t> decode(std::uint64_t symbol) const;
  std::uint64_t encode(std::span<const std::uint64_t> digits) const;

  friend bool operator==(const PartyLayout&, const PartyLayout&) = default;
};

struct Atom {
  std::vector<std::uint64_t> symbols;  // one per party
  Rational probability;
};

class JointDistribution {
 public:
  // Merges duplicate tuples, drops zero atoms and validates alphabets,
  // positivity and normalization. Throws InputError on violation.
  JointDistribution(std::vector<PartyLayout> layout, std::vector<Atom> atoms);

  // One atom of probability 1 on a single-symbol register per party.
  static JointDistribution trivial(int n);

  int party_count() const { return static_cast<int>(layout_.size()); }
  const std::vector<PartyLayout>& layout() const { return layout_; }
  // Sorted lexicographically by symbol tuple.
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t support_size() const { return atoms_.size(); }
  // Probability of a tuple; zero if absent.
  Rational probability(std::span<const std::uint64_t> symbols) const;
  bool same_alphabets(const JointDistribution& other) const;

  friend bool operator==(const JointDistribution& a, const JointDistribution& b);

 private:
  struct Normalized {};
  JointDistribution(Normalized, std::vector<PartyLayout> layout, std::vector<Atom> atoms)
      : layout_(std::move(layout)), atoms_(std::move(atoms)) {}
  friend JointDistribution marginal(const JointDistribution&, SubsetMask);
  friend JointDistribution mix(const JointDistribution&, const JointDistribution&,
                               const Rational&);
  friend JointDistribution tensor(const JointDistribution&, const JointDistribution&);

  std::vector<PartyLayout> layout_;
  std::vector<Atom> atoms_;
};

struct StatePair {
  JointDistribution rho;
  JointDistribution sigma;

  // Throws InputError unless rho and sigma share alphabets.
  StatePair(JointDistribution r, JointDistribution s);
  int party_count() const { return rho.party_count(); }
};

// Marginal on the parties in s, kept in ascending party order.
JointDistribution marginal(const JointDistribution& d, SubsetMask s);

// weight * d0 + (1 - weight) * d1 with 0 < weight < 1.
JointDistribution mix(const JointDistribution& d0, const JointDistribution& d1,
                      const Rational& weight);

// Party-wise product: party i holds a's registers followed by b's, with
// size-1 registers dropped unless the party has no other register.
JointDistribution tensor(const JointDistribution& a, const JointDistribution& b);
StatePair tensor(const StatePair& a, const StatePair& b);

// sum_x P(x) log2(P(x)/Q(x)), +inf when supp P is not inside supp Q.
Bits relative_entropy(const JointDistribution& p, const JointDistribution& q);

// D(rho^S || sigma^S) for every nonempty S.
REVector re_vector(const StatePair& pair);

double shannon_entropy(const JointDistribution& p);

// D(P || P^S ⊗ P^{complement of S}); s must be a proper nonempty subset.
double mutual_information(const JointDistribution& p, SubsetMask s);

// log2 of a positive rational without converting it to a double first.
double log2_rational(const Rational& x);

std::string to_string(const Rational& x);

}  // namespace relcone
