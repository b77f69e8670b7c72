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

#include "relcone/realize.hpp"

#include <cmath>
#include <limits>

#include "relcone/errors.hpp"
#include "relcone/field.hpp"

namespace relcone {

Rational ray_weight(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw ParameterError("ray coefficient must be positive and finite");
  }
  const double scaled = std::round(std::ldexp(std::exp2(-lambda), 53));
  Rational p(mpz_class(scaled), mpz_class(1) << 53);
  p.canonicalize();
  if (sgn(p) <= 0 || p >= 1) {
    throw ParameterError("ray coefficient " + std::to_string(lambda) +
                         " is outside the representable range");
  }
  return p;
}

StatePair realize_ray(const UpSet& u, double lambda) {
  const Rational p = ray_weight(lambda);
  const Scheme scheme = dnf_scheme(AccessStructure{u});
  JointDistribution rho = scheme.state(0);
  JointDistribution sigma = mix(rho, scheme.state(1), p);
  return StatePair(std::move(rho), std::move(sigma));
}

VerificationReport verify(const REVector& target, const StatePair& pair, double tol) {
  if (target.party_count() != pair.party_count()) {
    throw InputError("target and state pair have different party counts");
  }
  VerificationReport report(target.party_count());
  report.tolerance = tol;
  report.achieved = re_vector(pair);
  for (SubsetMask s : coordinate_order(target.party_count())) {
    const Bits t = target.at(s);
    const Bits a = report.achieved.at(s);
    double dev = 0.0;
    if (t.is_infinite() != a.is_infinite()) {
      dev = std::numeric_limits<double>::infinity();
    } else if (t.is_finite()) {
      dev = std::abs(a.value() - t.value());
    }
    report.subsets.push_back({s, t, a, dev});
    report.max_abs_error = std::max(report.max_abs_error, dev);
    if (!(dev <= tol)) report.failing.push_back(s);
  }
  report.achieved_monotone = check_membership(report.achieved).member;
  report.passed = report.failing.empty() && report.achieved_monotone;
  return report;
}

int synthesis_support_log2(const RayDecomposition& d) {
  int bits = 0;
  for (const RayTerm& term : d.terms) {
    bits += 1;
    for (SubsetMask m : minimal_sets(term.upset)) bits += m.size() - 1;
  }
  return bits;
}

RealizationResult synthesize(const REVector& target, double tol) {
  if (!target.all_finite()) {
    throw UnsupportedError("targets with infinite entries are only reachable as limits");
  }
  RayDecomposition d = layer_cake_decompose(target);
  const int support = synthesis_support_log2(d);
  if (support > kMaxSupportLog2) {
    throw UnsupportedError("realization needs 2^" + std::to_string(support) +
                           " sigma atoms; the limit is 2^" + std::to_string(kMaxSupportLog2));
  }
  StatePair pair(JointDistribution::trivial(target.party_count()),
                 JointDistribution::trivial(target.party_count()));
  for (const RayTerm& term : d.terms) pair = tensor(pair, realize_ray(term.upset, term.coefficient));
  const VerificationReport check = verify(target, pair, tol);
  if (!check.passed) {
    throw VerificationError("synthesized pair misses the target by " +
                            std::to_string(check.max_abs_error) + " bits");
  }
  return RealizationResult{target, std::move(d), std::move(pair), check.achieved,
                           check.max_abs_error, tol};
}

namespace {

Demo make_demo(std::string name, Scheme scheme, UpSet structure,
               std::vector<SubsetMask> highlights) {
  JointDistribution rho = scheme.state(0);
  JointDistribution sigma = mix(rho, scheme.state(1), Rational(1, 2));
  REVector target = REVector::indicator(structure);
  return Demo{std::move(name), std::move(scheme), AccessStructure{std::move(structure)},
              StatePair(std::move(rho), std::move(sigma)), std::move(target),
              std::move(highlights)};
}

}  // namespace

Demo example5_demo() {
  const std::vector<std::uint32_t> allocation{2, 1, 1};
  const std::uint32_t shares = 4;
  const std::uint32_t k = 2;
  Scheme scheme = weighted_threshold_scheme(3, allocation, k, next_prime_above(shares));
  return make_demo("example5", std::move(scheme), threshold_access_structure(3, allocation, k),
                   {SubsetMask(0b001), SubsetMask(0b010)});
}

Demo example6_demo() {
  const int n = 4;
  const std::vector<ThresholdClause> clauses{
      {{1, 1, 0, 0}, 2, next_prime_above(2)},
      {{0, 0, 1, 1}, 2, next_prime_above(2)},
  };
  Scheme scheme = threshold_hierarchy_scheme(n, clauses);
  const std::vector<SubsetMask> minimal{SubsetMask(0b0011), SubsetMask(0b1100)};
  return make_demo("example6", std::move(scheme), upward_closure(minimal, n),
                   {SubsetMask(0b0011), SubsetMask(0b0110)});
}

}  // namespace relcone
