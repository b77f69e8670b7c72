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

// Classical secret-sharing schemes for one secret bit: Shamir threshold
// sharing over GF(p), hierarchies of independent threshold clauses (which
// covers weighted share allocations), the GF(2) additive construction with
// one clause per minimal authorized set, and an exhaustive auditor.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relcone/lattice.hpp"
#include "relcone/states.hpp"

namespace relcone {

struct AccessStructure {
  UpSet upset;

  bool authorized(SubsetMask s) const { return upset.contains(s); }
  int party_count() const { return upset.party_count(); }
};

using ShareTuple = std::vector<std::uint64_t>;

struct ShareAtom {
  ShareTuple shares;  // every register, parties in order
  Rational probability;
};

class Scheme {
 public:
  // registers[i] lists the alphabet size of each register held by party i+1.
  // Throws InputError if a table does not conform to the layout, repeats a
  // tuple or does not sum to one.
  Scheme(std::vector<std::vector<std::uint64_t>> registers,
         std::vector<ShareAtom> table0, std::vector<ShareAtom> table1);

  int party_count() const { return static_cast<int>(registers_.size()); }
  const std::vector<std::vector<std::uint64_t>>& registers() const { return registers_; }
  std::size_t register_count() const;
  const std::vector<ShareAtom>& table(int bit) const;
  // Joint distribution of the shares given the secret bit.
  JointDistribution state(int bit) const;

 private:
  std::vector<std::vector<std::uint64_t>> registers_;
  std::vector<ShareAtom> tables_[2];
};

// Shares (y(1), ..., y(m)) for every y(x) = b + a_1 x + ... + a_{k-1} x^{k-1},
// coefficients enumerated with a_1 varying slowest. p^(k-1) tuples.
std::vector<std::vector<std::uint32_t>> shamir_table(std::uint32_t p, std::uint32_t k,
                                                     std::uint32_t m, int b);

// One independent Shamir sharing of the secret. allocation[i] consecutive
// evaluation points go to party i+1; parties with zero allocation hold no
// register for this clause.
struct ThresholdClause {
  std::vector<std::uint32_t> allocation;
  std::uint32_t threshold = 1;
  std::uint32_t prime = 2;
};

// Scheme whose registers are the union of all clause shares (clause order,
// then share order). A party in no clause gets a single 1-symbol register.
Scheme threshold_hierarchy_scheme(int n, std::span<const ThresholdClause> clauses);

// Single-clause hierarchy.
Scheme weighted_threshold_scheme(int n, std::span<const std::uint32_t> allocation,
                                 std::uint32_t k, std::uint32_t p);

// {S : sum of allocation over S >= k}; throws ParameterError if empty.
UpSet threshold_access_structure(int n, std::span<const std::uint32_t> allocation,
                                 std::uint32_t k);

// Per minimal authorized set A (in coordinate order), an (|A|, |A|) additive
// sharing of b over GF(2): uniform bits for all members but the last, which
// holds b xor the rest.
Scheme dnf_scheme(const AccessStructure& a);

struct SchemeFailure {
  SubsetMask subset;
  bool authorized;  // per the claimed access structure
  std::string reason;
};

struct SchemeVerification {
  bool passed = true;
  std::vector<SchemeFailure> failures;
};

// Authorized S: supports of the S-marginals of state(0) and state(1) are
// disjoint. Unauthorized S: the two marginals are identical.
SchemeVerification verify_scheme(const Scheme& s, const AccessStructure& a);

}  // namespace relcone
