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

// JSON (de)serialization and plain-text rendering.
//
// Vector:     {"n": 3, "entries": [{"parties": [1], "value": 1.0}, ...]}
//             "value" may be the string "inf".
// State pair: {"n": 3, "alphabet_sizes": [25, 5, 5],
//              "registers": [[5, 5], [5], [5]],            (optional)
//              "rho":   [{"symbols": [0, 0, 0], "p": {"num": "1", "den": "5"}}, ...],
//              "sigma": [...]}
// Symbols are per-party codes; with registers present they are mixed-radix
// codes of the register values, first register most significant.

#pragma once

#include <json.hpp>

#include <string>

#include "relcone/cone.hpp"
#include "relcone/lattice.hpp"
#include "relcone/realize.hpp"
#include "relcone/states.hpp"

namespace relcone {

using Json = nlohmann::ordered_json;

Json to_json(const REVector& v);
// Throws InputError on schema violations (missing/duplicate subsets, bad
// values, wrong n).
REVector vector_from_json(const Json& j);

Json to_json(const JointDistribution& d);
Json to_json(const StatePair& pair);
StatePair pair_from_json(const Json& j);

Json to_json(const MembershipReport& r, int n);
Json to_json(const RayDecomposition& d);
Json to_json(const VerificationReport& r);
Json to_json(const RealizationResult& r);

// Parses text, mapping parse failures to InputError.
Json parse_json(const std::string& text);

// "1/5 |00>" lines for each atom, registers of a party written as digits
// (dot-separated when an alphabet exceeds 10).
std::string format_atoms(const JointDistribution& d);

// Table of rays with a header of coordinate labels. With classes, one row
// per permutation class plus its orbit size.
std::string format_rays(int n, bool classes);
Json rays_json(int n, bool classes);

std::string format_demo(const Demo& demo);

}  // namespace relcone
