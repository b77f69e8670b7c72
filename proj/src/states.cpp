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

#include "relcone/states.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <unordered_map>

#include "relcone/errors.hpp"

namespace relcone {

namespace {

constexpr std::uint64_t kMaxAlphabet = std::uint64_t{1} << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kMaxAlphabet / a) {
    throw InputError("party alphabet exceeds 2^62 symbols");
  }
  return a * b;
}

bool tuple_less(const Atom& a, const Atom& b) { return a.symbols < b.symbols; }

struct TupleHash {
  std::size_t operator()(const std::vector<std::uint64_t>& t) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : t) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Neumaier-compensated sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// acc += x. Synthesized pairs are dyadic throughout (ray weights are k/2^53,
// scheme shares uniform over powers of two), and for power-of-two
// denominators the sum only needs shifts instead of a gcd.
void add_to(Rational& acc, const Rational& x) {
  mpz_srcptr da = mpq_denref(acc.get_mpq_t());
  mpz_srcptr dx = mpq_denref(x.get_mpq_t());
  if (mpz_popcount(da) != 1 || mpz_popcount(dx) != 1) {
    acc += x;
    return;
  }
  const mp_bitcnt_t ea = mpz_scan1(da, 0);
  const mp_bitcnt_t ex = mpz_scan1(dx, 0);
  mpz_ptr num = mpq_numref(acc.get_mpq_t());
  mpz_ptr den = mpq_denref(acc.get_mpq_t());
  if (ea >= ex) {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), mpq_numref(x.get_mpq_t()), ea - ex);
    mpz_add(num, num, scaled.get_mpz_t());
  } else {
    mpz_mul_2exp(num, num, ex - ea);
    mpz_add(num, num, mpq_numref(x.get_mpq_t()));
    mpz_set(den, dx);
  }
  if (mpz_sgn(num) == 0) {
    mpz_set_ui(den, 1);
    return;
  }
  const mp_bitcnt_t twos = std::min<mp_bitcnt_t>(mpz_scan1(num, 0), mpz_scan1(den, 0));
  if (twos > 0) {
    mpz_fdiv_q_2exp(num, num, twos);
    mpz_fdiv_q_2exp(den, den, twos);
  }
}

// Sorts atoms by tuple and folds equal tuples together, dropping zeros.
std::vector<Atom> merge_sorted(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end(), tuple_less);
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (Atom& a : atoms) {
    if (!out.empty() && out.back().symbols == a.symbols) {
      add_to(out.back().probability, a.probability);
    } else {
      out.push_back(std::move(a));
    }
  }
  std::erase_if(out, [](const Atom& a) { return sgn(a.probability) == 0; });
  return out;
}

}  // namespace

std::uint64_t PartyLayout::alphabet_size() const {
  std::uint64_t size = 1;
  for (std::uint64_t r : registers) size = checked_mul(size, r);
  return size;
}

std::vector<std::uint64_t> PartyLayout::decode(std::uint64_t symbol) const {
  std::vector<std::uint64_t> digits(registers.size());
  for (std::size_t i = registers.size(); i-- > 0;) {
    digits[i] = symbol % registers[i];
    symbol /= registers[i];
  }
  return digits;
}

std::uint64_t PartyLayout::encode(std::span<const std::uint64_t> digits) const {
  if (digits.size() != registers.size()) throw InputError("register count mismatch");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] >= registers[i]) throw InputError("register value out of range");
    code = code * registers[i] + digits[i];
  }
  return code;
}

JointDistribution::JointDistribution(std::vector<PartyLayout> layout, std::vector<Atom> atoms)
    : layout_(std::move(layout)) {
  check_party_count(static_cast<int>(layout_.size()));
  std::vector<std::uint64_t> sizes;
  for (const PartyLayout& p : layout_) {
    if (p.registers.empty()) throw InputError("party without registers");
    for (std::uint64_t r : p.registers) {
      if (r == 0) throw InputError("register with empty alphabet");
    }
    sizes.push_back(p.alphabet_size());
  }
  for (Atom& a : atoms) {
    if (a.symbols.size() != layout_.size()) throw InputError("atom arity mismatch");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (a.symbols[i] >= sizes[i]) throw InputError("symbol outside party alphabet");
    }
    a.probability.canonicalize();
    if (sgn(a.probability) < 0) throw InputError("negative probability");
  }
  atoms_ = merge_sorted(std::move(atoms));
  Rational total = 0;
  for (const Atom& a : atoms_) total += a.probability;
  if (total != 1) throw InputError("probabilities sum to " + to_string(total) + ", not 1");
}

JointDistribution JointDistribution::trivial(int n) {
  check_party_count(n);
  std::vector<PartyLayout> layout(n, PartyLayout{{1}});
  std::vector<Atom> atoms{Atom{std::vector<std::uint64_t>(n, 0), Rational(1)}};
  return JointDistribution(Normalized{}, std::move(layout), std::move(atoms));
}

Rational JointDistribution::probability(std::span<const std::uint64_t> symbols) const {
  const std::vector<std::uint64_t> key(symbols.begin(), symbols.end());
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), key,
                             [](const Atom& a, const std::vector<std::uint64_t>& k) {
                               return a.symbols < k;
                             });
  if (it != atoms_.end() && it->symbols == key) return it->probability;
  return Rational(0);
}

bool JointDistribution::same_alphabets(const JointDistribution& other) const {
  return layout_ == other.layout_;
}

bool operator==(const JointDistribution& a, const JointDistribution& b) {
  if (!a.same_alphabets(b) || a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
    if (a.atoms_[i].symbols != b.atoms_[i].symbols ||
        a.atoms_[i].probability != b.atoms_[i].probability) {
      return false;
    }
  }
  return true;
}

StatePair::StatePair(JointDistribution r, JointDistribution s)
    : rho(std::move(r)), sigma(std::move(s)) {
  if (!rho.same_alphabets(sigma)) throw InputError("rho and sigma alphabets differ");
}

JointDistribution marginal(const JointDistribution& d, SubsetMask s) {
  check_mask(s, d.party_count());
  const std::vector<int> keep = parties_of(s);
  std::vector<PartyLayout> layout;
  for (int p : keep) layout.push_back(d.layout()[p - 1]);
  std::vector<Atom> atoms;

  // Atoms are sorted by tuple, so dropping trailing parties keeps equal
  // projections adjacent and in order.
  if (keep.back() == static_cast<int>(keep.size())) {
    for (const Atom& a : d.atoms()) {
      if (!atoms.empty() && std::equal(keep.begin(), keep.end(), atoms.back().symbols.begin(),
                                       [&](int p, std::uint64_t x) { return a.symbols[p - 1] == x; })) {
        add_to(atoms.back().probability, a.probability);
      } else {
        atoms.push_back({{a.symbols.begin(), a.symbols.begin() + keep.size()}, a.probability});
      }
    }
    return JointDistribution(JointDistribution::Normalized{}, std::move(layout), std::move(atoms));
  }

  std::unordered_map<std::vector<std::uint64_t>, Rational, TupleHash> sums;
  sums.reserve(d.atoms().size());
  std::vector<std::uint64_t> key(keep.size());
  for (const Atom& a : d.atoms()) {
    for (std::size_t i = 0; i < keep.size(); ++i) key[i] = a.symbols[keep[i] - 1];
    auto [it, fresh] = sums.try_emplace(key, a.probability);
    if (!fresh) add_to(it->second, a.probability);
  }
  // Sorting pointers is far cheaper than sorting atoms.
  std::vector<decltype(sums)::value_type*> order;
  order.reserve(sums.size());
  for (auto& entry : sums) order.push_back(&entry);
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) { return x->first < y->first; });
  atoms.reserve(order.size());
  for (auto* entry : order) atoms.push_back({entry->first, std::move(entry->second)});
  return JointDistribution(JointDistribution::Normalized{}, std::move(layout), std::move(atoms));
}

JointDistribution mix(const JointDistribution& d0, const JointDistribution& d1,
                      const Rational& weight) {
  if (!d0.same_alphabets(d1)) throw InputError("cannot mix distributions over different alphabets");
  if (sgn(weight) <= 0 || weight >= 1) throw InputError("mixing weight must lie in (0, 1)");
  const Rational other = 1 - weight;
  std::vector<Atom> atoms;
  atoms.reserve(d0.atoms().size() + d1.atoms().size());
  for (const Atom& a : d0.atoms()) atoms.push_back({a.symbols, weight * a.probability});
  for (const Atom& a : d1.atoms()) atoms.push_back({a.symbols, other * a.probability});
  return JointDistribution(JointDistribution::Normalized{}, d0.layout(),
                           merge_sorted(std::move(atoms)));
}

JointDistribution tensor(const JointDistribution& a, const JointDistribution& b) {
  if (a.party_count() != b.party_count()) {
    throw InputError("tensor of distributions with different party counts");
  }
  const int n = a.party_count();
  std::vector<PartyLayout> layout(n);
  std::vector<std::uint64_t> right(n);
  for (int i = 0; i < n; ++i) {
    // Size-1 registers carry no information; keep one only if nothing else is left.
    for (const auto* side : {&a.layout()[i].registers, &b.layout()[i].registers}) {
      for (std::uint64_t r : *side) {
        if (r > 1) layout[i].registers.push_back(r);
      }
    }
    if (layout[i].registers.empty()) layout[i].registers.push_back(1);
    checked_mul(a.layout()[i].alphabet_size(), b.layout()[i].alphabet_size());
    right[i] = b.layout()[i].alphabet_size();
  }
  std::vector<Atom> atoms;
  atoms.reserve(a.atoms().size() * b.atoms().size());
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) {
      Atom z;
      z.symbols.resize(n);
      for (int i = 0; i < n; ++i) z.symbols[i] = x.symbols[i] * right[i] + y.symbols[i];
      z.probability = x.probability * y.probability;
      atoms.push_back(std::move(z));
    }
  }
  std::sort(atoms.begin(), atoms.end(), tuple_less);
  return JointDistribution(JointDistribution::Normalized{}, std::move(layout), std::move(atoms));
}

StatePair tensor(const StatePair& a, const StatePair& b) {
  return StatePair(tensor(a.rho, b.rho), tensor(a.sigma, b.sigma));
}

double log2_rational(const Rational& x) {
  if (sgn(x) <= 0) throw InputError("log of a non-positive rational");
  long num_exp = 0;
  long den_exp = 0;
  const double num = mpz_get_d_2exp(&num_exp, x.get_num_mpz_t());
  const double den = mpz_get_d_2exp(&den_exp, x.get_den_mpz_t());
  return std::log2(num) - std::log2(den) + static_cast<double>(num_exp - den_exp);
}

Bits relative_entropy(const JointDistribution& p, const JointDistribution& q) {
  if (!p.same_alphabets(q)) throw InputError("relative entropy over different alphabets");
  Accumulator sum;
  auto qi = q.atoms().begin();
  for (const Atom& a : p.atoms()) {
    while (qi != q.atoms().end() && qi->symbols < a.symbols) ++qi;
    if (qi == q.atoms().end() || qi->symbols != a.symbols) return Bits::infinity();
    if (a.probability == qi->probability) continue;
    const Rational ratio = a.probability / qi->probability;
    sum.add(a.probability.get_d() * log2_rational(ratio));
  }
  // Mathematically nonnegative; clamp rounding noise around zero.
  return Bits::finite(std::max(0.0, sum.value()));
}

REVector re_vector(const StatePair& pair) {
  const int n = pair.party_count();
  const std::uint32_t full = full_bits(n);
  // Each marginal is taken from a cached marginal on one more party, so the
  // full distributions are projected only n times.
  std::vector<std::optional<StatePair>> cache(full + 1);
  REVector v(n);
  for (int size = n; size >= 1; --size) {
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (std::popcount(s) != size) continue;
      const StatePair* here = &pair;
      if (s != full) {
        const std::uint32_t missing = full & ~s;
        // Adding the highest missing party makes s a prefix of the parent
        // whenever possible, which marginal() handles without hashing.
        const std::uint32_t parent = s | std::bit_floor(missing);
        std::uint32_t local = 0;
        int index = 0;
        for (int p : parties_of(SubsetMask(parent))) {
          if (s & (1u << (p - 1))) local |= 1u << index;
          ++index;
        }
        const StatePair& from = parent == full ? pair : *cache[parent];
        cache[s].emplace(marginal(from.rho, SubsetMask(local)),
                         marginal(from.sigma, SubsetMask(local)));
        here = &*cache[s];
      }
      v.set(SubsetMask(s), relative_entropy(here->rho, here->sigma));
    }
    // Parents of the next layer are exactly this layer; older entries can go.
    for (std::uint32_t s = 1; s <= full; ++s) {
      if (std::popcount(s) == size + 1) cache[s].reset();
    }
  }
  return v;
}

double shannon_entropy(const JointDistribution& p) {
  Accumulator sum;
  for (const Atom& a : p.atoms()) {
    sum.add(-a.probability.get_d() * log2_rational(a.probability));
  }
  return std::max(0.0, sum.value());
}

double mutual_information(const JointDistribution& p, SubsetMask s) {
  const int n = p.party_count();
  check_mask(s, n);
  const SubsetMask rest(full_bits(n) & ~s.bits());
  if (rest.bits() == 0) throw InputError("mutual information needs a proper subset");
  const JointDistribution ps = marginal(p, s);
  const JointDistribution pr = marginal(p, rest);
  const auto in_s = parties_of(s);
  const auto in_rest = parties_of(rest);
  Accumulator sum;
  for (const Atom& a : p.atoms()) {
    std::vector<std::uint64_t> xs;
    std::vector<std::uint64_t> xr;
    for (int i : in_s) xs.push_back(a.symbols[i - 1]);
    for (int i : in_rest) xr.push_back(a.symbols[i - 1]);
    const Rational product = ps.probability(xs) * pr.probability(xr);
    if (a.probability == product) continue;
    sum.add(a.probability.get_d() * log2_rational(a.probability / product));
  }
  return std::max(0.0, sum.value());
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace relcone
