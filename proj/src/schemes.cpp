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

#include "relcone/schemes.hpp"

#include <algorithm>
#include <numeric>

#include "relcone/errors.hpp"
#include "relcone/field.hpp"

namespace relcone {

namespace {

void check_table(const std::vector<std::vector<std::uint64_t>>& registers,
                 std::vector<ShareAtom>& table) {
  std::vector<std::uint64_t> sizes;
  for (const auto& party : registers) sizes.insert(sizes.end(), party.begin(), party.end());
  Rational total = 0;
  for (ShareAtom& atom : table) {
    if (atom.shares.size() != sizes.size()) throw InputError("share tuple arity mismatch");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (atom.shares[i] >= sizes[i]) throw InputError("share outside register alphabet");
    }
    atom.probability.canonicalize();
    if (sgn(atom.probability) <= 0) throw InputError("non-positive share probability");
    total += atom.probability;
  }
  if (total != 1) throw InputError("share probabilities do not sum to 1");
  std::sort(table.begin(), table.end(),
            [](const ShareAtom& a, const ShareAtom& b) { return a.shares < b.shares; });
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i - 1].shares == table[i].shares) throw InputError("repeated share tuple");
  }
}

// Builds a uniform table from the cartesian product of per-clause share
// lists. clause_shares[c][t] is the t-th tuple of clause c, one value per
// (party, register) slot the clause owns; slots[c] names the flat register
// index each value lands in.
std::vector<ShareAtom> product_table(
    std::size_t width, const std::vector<std::vector<std::vector<std::uint64_t>>>& clause_shares,
    const std::vector<std::vector<std::size_t>>& slots) {
  std::size_t total = 1;
  for (const auto& c : clause_shares) total *= c.size();
  const Rational weight(1, static_cast<unsigned long>(total));
  std::vector<ShareAtom> out;
  out.reserve(total);
  std::vector<std::size_t> idx(clause_shares.size(), 0);
  for (std::size_t count = 0; count < total; ++count) {
    ShareTuple tuple(width, 0);
    for (std::size_t c = 0; c < clause_shares.size(); ++c) {
      const auto& values = clause_shares[c][idx[c]];
      for (std::size_t j = 0; j < values.size(); ++j) tuple[slots[c][j]] = values[j];
    }
    out.push_back({std::move(tuple), weight});
    // Last clause varies fastest.
    for (std::size_t c = clause_shares.size(); c-- > 0;) {
      if (++idx[c] < clause_shares[c].size()) break;
      idx[c] = 0;
    }
  }
  return out;
}

// Flat register index of (party, k-th register of that party).
std::vector<std::size_t> register_offsets(
    const std::vector<std::vector<std::uint64_t>>& registers) {
  std::vector<std::size_t> offsets(registers.size(), 0);
  for (std::size_t i = 1; i < registers.size(); ++i) {
    offsets[i] = offsets[i - 1] + registers[i - 1].size();
  }
  return offsets;
}

}  // namespace

Scheme::Scheme(std::vector<std::vector<std::uint64_t>> registers,
               std::vector<ShareAtom> table0, std::vector<ShareAtom> table1)
    : registers_(std::move(registers)) {
  check_party_count(static_cast<int>(registers_.size()));
  for (const auto& party : registers_) {
    if (party.empty()) throw InputError("party without registers");
    for (std::uint64_t r : party) {
      if (r == 0) throw InputError("register with empty alphabet");
    }
  }
  check_table(registers_, table0);
  check_table(registers_, table1);
  tables_[0] = std::move(table0);
  tables_[1] = std::move(table1);
}

std::size_t Scheme::register_count() const {
  std::size_t count = 0;
  for (const auto& party : registers_) count += party.size();
  return count;
}

const std::vector<ShareAtom>& Scheme::table(int bit) const {
  if (bit != 0 && bit != 1) throw InputError("secret bit must be 0 or 1");
  return tables_[bit];
}

JointDistribution Scheme::state(int bit) const {
  std::vector<PartyLayout> layout;
  for (const auto& party : registers_) layout.push_back(PartyLayout{party});
  const auto offsets = register_offsets(registers_);
  std::vector<Atom> atoms;
  for (const ShareAtom& share : table(bit)) {
    Atom atom;
    for (std::size_t i = 0; i < registers_.size(); ++i) {
      const std::span<const std::uint64_t> digits(share.shares.data() + offsets[i],
                                                  registers_[i].size());
      atom.symbols.push_back(layout[i].encode(digits));
    }
    atom.probability = share.probability;
    atoms.push_back(std::move(atom));
  }
  return JointDistribution(std::move(layout), std::move(atoms));
}

std::vector<std::vector<std::uint32_t>> shamir_table(std::uint32_t p, std::uint32_t k,
                                                     std::uint32_t m, int b) {
  if (!is_prime(p)) throw ParameterError(std::to_string(p) + " is not prime");
  if (p <= m) throw ParameterError("field size must exceed the share count");
  if (k < 1 || k > m) throw ParameterError("threshold must lie in [1, share count]");
  if (b != 0 && b != 1) throw ParameterError("secret bit must be 0 or 1");

  std::vector<FieldElement> coeffs(k, FieldElement(0, p));
  coeffs[0] = FieldElement(b, p);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> a(k - 1, 0);
  while (true) {
    for (std::uint32_t i = 1; i < k; ++i) coeffs[i] = FieldElement(a[i - 1], p);
    std::vector<std::uint32_t> shares;
    for (std::uint32_t x = 1; x <= m; ++x) {
      shares.push_back(evaluate(coeffs, FieldElement(x, p)).value());
    }
    out.push_back(std::move(shares));
    std::size_t i = a.size();
    while (i > 0 && ++a[i - 1] == p) a[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Scheme threshold_hierarchy_scheme(int n, std::span<const ThresholdClause> clauses) {
  check_party_count(n);
  if (clauses.empty()) throw ParameterError("a scheme needs at least one clause");

  std::vector<std::vector<std::uint64_t>> registers(n);
  for (const ThresholdClause& c : clauses) {
    if (static_cast<int>(c.allocation.size()) != n) {
      throw ParameterError("allocation length does not match party count");
    }
    for (int i = 0; i < n; ++i) {
      registers[i].insert(registers[i].end(), c.allocation[i], c.prime);
    }
  }
  std::vector<bool> degenerate(n, false);
  for (int i = 0; i < n; ++i) {
    if (registers[i].empty()) {
      registers[i].push_back(1);
      degenerate[i] = true;
    }
  }

  // Slot of each clause share in the flat tuple.
  const auto offsets = register_offsets(registers);
  std::vector<std::size_t> used(n, 0);
  std::vector<std::vector<std::size_t>> slots;
  for (const ThresholdClause& c : clauses) {
    std::vector<std::size_t> s;
    for (int i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < c.allocation[i]; ++j) s.push_back(offsets[i] + used[i]++);
    }
    slots.push_back(std::move(s));
  }

  std::vector<ShareAtom> tables[2];
  for (int b = 0; b < 2; ++b) {
    std::vector<std::vector<std::vector<std::uint64_t>>> clause_shares;
    for (const ThresholdClause& c : clauses) {
      const std::uint32_t m = std::accumulate(c.allocation.begin(), c.allocation.end(), 0U);
      std::vector<std::vector<std::uint64_t>> rows;
      for (const auto& row : shamir_table(c.prime, c.threshold, m, b)) {
        rows.emplace_back(row.begin(), row.end());
      }
      clause_shares.push_back(std::move(rows));
    }
    tables[b] = product_table(offsets.back() + registers.back().size(), clause_shares, slots);
  }
  return Scheme(std::move(registers), std::move(tables[0]), std::move(tables[1]));
}

Scheme weighted_threshold_scheme(int n, std::span<const std::uint32_t> allocation,
                                 std::uint32_t k, std::uint32_t p) {
  const ThresholdClause clause{{allocation.begin(), allocation.end()}, k, p};
  return threshold_hierarchy_scheme(n, std::span<const ThresholdClause>(&clause, 1));
}

UpSet threshold_access_structure(int n, std::span<const std::uint32_t> allocation,
                                 std::uint32_t k) {
  check_party_count(n);
  if (static_cast<int>(allocation.size()) != n) {
    throw ParameterError("allocation length does not match party count");
  }
  std::vector<SubsetMask> members;
  for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
    std::uint32_t shares = 0;
    for (int p : parties_of(SubsetMask(s))) shares += allocation[p - 1];
    if (shares >= k) members.emplace_back(s);
  }
  if (members.empty()) throw ParameterError("no group reaches the threshold");
  return UpSet::from_members(members, n);
}

Scheme dnf_scheme(const AccessStructure& a) {
  const int n = a.party_count();
  std::vector<SubsetMask> clauses = minimal_sets(a.upset);
  const auto order = coordinate_order(n);
  std::sort(clauses.begin(), clauses.end(), [&](SubsetMask x, SubsetMask y) {
    return std::find(order.begin(), order.end(), x) < std::find(order.begin(), order.end(), y);
  });

  std::vector<std::vector<std::uint64_t>> registers(n);
  for (SubsetMask c : clauses) {
    for (int p : parties_of(c)) registers[p - 1].push_back(2);
  }
  for (auto& r : registers) {
    if (r.empty()) r.push_back(1);
  }
  const auto offsets = register_offsets(registers);
  std::vector<std::size_t> used(n, 0);
  std::vector<std::vector<std::size_t>> slots;
  for (SubsetMask c : clauses) {
    std::vector<std::size_t> s;
    for (int p : parties_of(c)) s.push_back(offsets[p - 1] + used[p - 1]++);
    slots.push_back(std::move(s));
  }

  std::vector<ShareAtom> tables[2];
  for (int b = 0; b < 2; ++b) {
    std::vector<std::vector<std::vector<std::uint64_t>>> clause_shares;
    for (SubsetMask c : clauses) {
      const std::size_t width = static_cast<std::size_t>(c.size());
      std::vector<std::vector<std::uint64_t>> rows;
      for (std::uint64_t r = 0; r < (std::uint64_t{1} << (width - 1)); ++r) {
        std::vector<std::uint64_t> row(width);
        std::uint64_t parity = static_cast<std::uint64_t>(b);
        for (std::size_t j = 0; j + 1 < width; ++j) {
          row[j] = (r >> (width - 2 - j)) & 1U;
          parity ^= row[j];
        }
        row[width - 1] = parity;
        rows.push_back(std::move(row));
      }
      clause_shares.push_back(std::move(rows));
    }
    tables[b] = product_table(offsets.back() + registers.back().size(), clause_shares, slots);
  }
  return Scheme(std::move(registers), std::move(tables[0]), std::move(tables[1]));
}

SchemeVerification verify_scheme(const Scheme& s, const AccessStructure& a) {
  if (s.party_count() != a.party_count()) {
    throw InputError("scheme and access structure have different party counts");
  }
  SchemeVerification report;
  const JointDistribution d0 = s.state(0);
  const JointDistribution d1 = s.state(1);
  for (std::uint32_t bits = 1; bits <= full_bits(s.party_count()); ++bits) {
    const SubsetMask mask(bits);
    const JointDistribution m0 = marginal(d0, mask);
    const JointDistribution m1 = marginal(d1, mask);
    if (a.authorized(mask)) {
      // Both atom lists are sorted; look for a shared tuple.
      auto i = m0.atoms().begin();
      auto j = m1.atoms().begin();
      bool overlap = false;
      while (i != m0.atoms().end() && j != m1.atoms().end() && !overlap) {
        if (i->symbols < j->symbols) {
          ++i;
        } else if (j->symbols < i->symbols) {
          ++j;
        } else {
          overlap = true;
        }
      }
      if (overlap) {
        report.failures.push_back({mask, true, "supports of the two secret values overlap"});
      }
    } else if (!(m0 == m1)) {
      report.failures.push_back({mask, false, "marginal depends on the secret"});
    }
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace relcone
