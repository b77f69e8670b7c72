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

// End-to-end realization of cone members by pairs of classical states:
// decompose into up-set rays, realize each ray with a secret-sharing scheme
// weighted so the authorized entries equal the ray coefficient, combine by
// tensor products and re-measure.

#pragma once

#include <string>
#include <vector>

#include "relcone/cone.hpp"
#include "relcone/schemes.hpp"
#include "relcone/states.hpp"

namespace relcone {

inline constexpr double kExactTolerance = 1e-9;
inline constexpr double kSynthesisTolerance = 1e-6;

// synthesize refuses decompositions whose sigma would hold more than
// 2^kMaxSupportLog2 atoms. Every level multiplies the support, so sums of a
// few rays at n = 4 can already need 2^40.
inline constexpr int kMaxSupportLog2 = 20;

// Weight of rho(0) in sigma for ray strength lambda:
// round(2^-lambda * 2^53) / 2^53, exact from then on. Throws ParameterError
// if lambda is not positive and finite or the rounded weight leaves (0, 1).
Rational ray_weight(double lambda);

// rho = rho(0), sigma = p rho(0) + (1 - p) rho(1) for the GF(2) scheme of u.
// Authorized entries evaluate to -log2 p, unauthorized ones to exactly 0.
StatePair realize_ray(const UpSet& u, double lambda);

struct SubsetDeviation {
  SubsetMask subset;
  Bits target;
  Bits achieved;
  double deviation;  // |achieved - target|; +inf on a finite/infinite mismatch
};

struct VerificationReport {
  bool passed = false;
  double tolerance = 0.0;
  double max_abs_error = 0.0;
  std::vector<SubsetDeviation> subsets;  // coordinate order
  std::vector<SubsetMask> failing;
  bool achieved_monotone = false;
  REVector achieved;

  explicit VerificationReport(int n) : achieved(n) {}
};

VerificationReport verify(const REVector& target, const StatePair& pair, double tol);

struct RealizationResult {
  REVector target;
  RayDecomposition decomposition;
  StatePair pair;
  REVector achieved;
  double max_abs_error;
  double tolerance;
};

// log2 of the number of sigma atoms that tensoring the ray realizations of d
// produces: each term contributes one bit for the p / 1 - p split plus
// |M| - 1 free bits per minimal set M.
int synthesis_support_log2(const RayDecomposition& d);

// Throws DomainError for non-members, UnsupportedError for infinite entries
// or a support above 2^kMaxSupportLog2, and VerificationError if the assembled pair misses the target by more
// than tol.
RealizationResult synthesize(const REVector& target, double tol = kSynthesisTolerance);

struct Demo {
  std::string name;
  Scheme scheme;
  AccessStructure structure;
  StatePair pair;
  REVector target;
  // Subsets whose marginals the demo prints.
  std::vector<SubsetMask> highlights;
};

// Four GF(5) Shamir shares at threshold 2, two to A, one each to B and C.
Demo example5_demo();
// Two (2,2) Shamir clauses over GF(3): {A, B} and {C, D}.
Demo example6_demo();

}  // namespace relcone
