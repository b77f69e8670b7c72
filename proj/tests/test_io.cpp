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

#include <doctest.h>

#include <random>

#include "relcone/errors.hpp"
#include "relcone/io.hpp"
#include "test_support.hpp"

using namespace relcone;
using relcone::testing::S;

TEST_CASE("vector JSON round trip") {
  relcone::testing::Rng rng(1);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  std::bernoulli_distribution inf(0.1);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 5;
    REVector v(n);
    for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
      v.set(SubsetMask(s), inf(rng) ? Bits::infinity() : Bits::finite(value(rng)));
    }
    CHECK(vector_from_json(parse_json(to_json(v).dump())) == v);
  }
}

TEST_CASE("vector JSON schema") {
  const auto parse = [](const char* text) { return vector_from_json(parse_json(text)); };
  const REVector v = parse(R"({"n": 2, "entries": [
      {"parties": [1], "value": "inf"}, {"parties": [2], "value": 0},
      {"parties": [2, 1], "value": "inf"}]})");
  CHECK(v.at(S("A")).is_infinite());
  CHECK(v.at(S("AB")).is_infinite());
  CHECK(v.at(S("B")).value() == 0.0);

  CHECK_THROWS_AS(parse(R"({"n": 2, "entries": [{"parties": [1], "value": 1}]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "entries": [{"parties": [1], "value": 1},
                                                {"parties": [1], "value": 1}]})"),
                  InputError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "entries": [{"parties": [2], "value": 1}]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "entries": [{"parties": [1], "value": -1}]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "entries": [{"parties": [1], "value": "big"}]})"), InputError);
  CHECK_THROWS_AS(parse(R"({"n": 0, "entries": []})"), InputError);
  CHECK_THROWS_AS(parse(R"({"entries": []})"), InputError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "entries": [)"), InputError);
}

TEST_CASE("state pair JSON keeps exact rationals") {
  // Squaring the two-level realization produces denominators far past 2^64.
  const auto result = synthesize(REVector::from_ordered(2, {0.3, 0, 1.7}));
  const StatePair big = tensor(result.pair, result.pair);
  bool wide = false;
  for (const Atom& a : big.sigma.atoms()) wide = wide || a.probability.get_den() > mpz_class(1) << 64;
  CHECK(wide);
  const StatePair back = pair_from_json(parse_json(to_json(big).dump()));
  CHECK(back.rho == big.rho);
  CHECK(back.sigma == big.sigma);
}

TEST_CASE("state pair JSON schema") {
  const auto parse = [](const char* text) { return pair_from_json(parse_json(text)); };
  const StatePair p = parse(R"({"n": 1, "alphabet_sizes": [2],
      "rho": [{"symbols": [0], "p": {"num": "1", "den": "1"}}],
      "sigma": [{"symbols": [0], "p": {"num": "1", "den": "2"}},
                {"symbols": [1], "p": {"num": "1", "den": "2"}}]})");
  CHECK(re_vector(p).at(S("A")).value() == doctest::Approx(1.0));
  CHECK(p.rho.layout()[0].registers == std::vector<std::uint64_t>{2});

  // not normalized
  CHECK_THROWS_AS(parse(R"({"n": 1, "alphabet_sizes": [2],
      "rho": [{"symbols": [0], "p": {"num": "1", "den": "2"}}],
      "sigma": [{"symbols": [0], "p": {"num": "1", "den": "1"}}]})"),
                  InputError);
  // registers inconsistent with alphabet
  CHECK_THROWS_AS(parse(R"({"n": 1, "alphabet_sizes": [4], "registers": [[3]],
      "rho": [{"symbols": [0], "p": {"num": "1", "den": "1"}}],
      "sigma": [{"symbols": [0], "p": {"num": "1", "den": "1"}}]})"),
                  InputError);
  // symbol arity
  CHECK_THROWS_AS(parse(R"({"n": 2, "alphabet_sizes": [2, 2],
      "rho": [{"symbols": [0], "p": {"num": "1", "den": "1"}}],
      "sigma": [{"symbols": [0, 0], "p": {"num": "1", "den": "1"}}]})"),
                  InputError);
  // zero denominator
  CHECK_THROWS_AS(parse(R"({"n": 1, "alphabet_sizes": [1],
      "rho": [{"symbols": [0], "p": {"num": "1", "den": "0"}}],
      "sigma": [{"symbols": [0], "p": {"num": "1", "den": "1"}}]})"),
                  InputError);
  CHECK_THROWS_AS(parse(R"({"n": 1, "alphabet_sizes": [1],
      "rho": [{"symbols": [0], "p": {"num": "x", "den": "1"}}],
      "sigma": [{"symbols": [0], "p": {"num": "1", "den": "1"}}]})"),
                  InputError);
}

TEST_CASE("report JSON") {
  const auto r = check_membership(REVector::from_ordered(2, {1, 0, 0.5}));
  const Json j = to_json(r, 2);
  CHECK(j["member"] == false);
  CHECK(j["violations"].size() == 1);
  CHECK(j["violations"][0]["superset"] == Json::array({1, 2}));
  CHECK(j["violations"][0]["subset"] == Json::array({1}));

  const Json d = to_json(layer_cake_decompose(REVector::from_ordered(2, {0.5, 0, 2.0})));
  CHECK(d["terms"].size() == 2);
  CHECK(d["terms"][0]["coefficient"] == 1.5);
  CHECK(d["terms"][1]["minimal_sets"] == Json::parse("[[1]]"));
}

TEST_CASE("ray listings") {
  const Json one = rays_json(1, false);
  CHECK(one["upset_count"] == 1);
  CHECK(one["rays"][0]["indicator"] == Json::array({1}));
  CHECK(format_rays(1, false).find("{A}") != std::string::npos);

  const Json three = rays_json(3, true);
  CHECK(three["classes"].size() == 8);
  CHECK(three["upset_count"] == 18);
  CHECK(three["classes"][5]["indicator"] == Json::array({1, 0, 0, 1, 1, 1, 1}));
}

TEST_CASE("demo output is stable and shows the marginals") {
  const std::string a = format_demo(example5_demo());
  CHECK(a == format_demo(example5_demo()));
  CHECK(a.find("achieved: [1, 0, 0, 1, 1, 1, 1]") != std::string::npos);
  CHECK(a.find("rho_A:\n  1/5 |00>\n  1/5 |12>\n  1/5 |24>\n  1/5 |31>\n  1/5 |43>\n") !=
        std::string::npos);

  const std::string b = format_demo(example6_demo());
  CHECK(b.find("achieved: [0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1]") != std::string::npos);
  CHECK(b.find("rho_AB:\n  1/3 |0 0>\n  1/3 |1 2>\n  1/3 |2 1>\n") != std::string::npos);
}
