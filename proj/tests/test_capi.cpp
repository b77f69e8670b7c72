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

// Exercises the shared library through its C interface only.

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "relcone/relcone.h"

namespace {

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  rc_string_free(s);
  return out;
}

rc_vector* vec(const char* json) {
  rc_vector* v = nullptr;
  REQUIRE(rc_vector_from_json(json, &v) == RC_OK);
  return v;
}

const char* kTwoParty = R"({"n": 2, "entries": [
    {"parties": [1], "value": 0.5}, {"parties": [2], "value": 0},
    {"parties": [1, 2], "value": 2}]})";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(rc_version()) == "1.0.0");
  CHECK(std::string(rc_status_name(RC_OK)) == "ok");
  CHECK(std::string(rc_status_name(RC_ERR_DOMAIN)) == "domain_error");
  CHECK(std::string(rc_status_name(static_cast<rc_status>(42))) == "unknown");
}

TEST_CASE("errors leave outputs untouched and set the message") {
  rc_vector* v = nullptr;
  CHECK(rc_vector_from_json("{not json", &v) == RC_ERR_INPUT);
  CHECK(v == nullptr);
  CHECK(std::strlen(rc_last_error()) > 0);
  CHECK(rc_vector_from_json(nullptr, &v) == RC_ERR_INPUT);
  CHECK(rc_vector_from_json(kTwoParty, nullptr) == RC_ERR_INPUT);

  rc_vector* bad = vec(R"({"n": 2, "entries": [{"parties": [1], "value": 3},
      {"parties": [2], "value": 0}, {"parties": [1, 2], "value": 1}]})");
  char* json = nullptr;
  CHECK(rc_decompose(bad, &json) == RC_ERR_DOMAIN);
  CHECK(json == nullptr);

  rc_vector* inf = vec(R"({"n": 1, "entries": [{"parties": [1], "value": "inf"}]})");
  CHECK(rc_decompose(inf, &json) == RC_ERR_UNSUPPORTED);
  rc_vector_free(inf);
  rc_vector_free(bad);

  rc_upset* u = nullptr;
  CHECK(rc_upset_from_minimal(9, nullptr, 0, &u) == RC_ERR_INPUT);
  CHECK(rc_rays(6, 0, 0, &json) == RC_ERR_UNSUPPORTED);
  CHECK(rc_demo("example7", &json) == RC_ERR_INPUT);
}

TEST_CASE("vector accessors and membership") {
  rc_vector* v = vec(kTwoParty);
  CHECK(rc_vector_party_count(v) == 2);
  double values[3];
  REQUIRE(rc_vector_values(v, values, 3) == RC_OK);
  CHECK(values[0] == 0.5);
  CHECK(values[2] == 2.0);
  CHECK(rc_vector_values(v, values, 2) == RC_ERR_INPUT);

  int member = -1;
  char* report = nullptr;
  REQUIRE(rc_check_membership(v, &member, &report) == RC_OK);
  CHECK(member == 1);
  CHECK(take(report).find("\"member\": true") != std::string::npos);

  char* json = nullptr;
  REQUIRE(rc_decompose(v, &json) == RC_OK);
  CHECK(take(json).find("\"terms\"") != std::string::npos);

  rc_vector* inf = vec(R"({"n": 1, "entries": [{"parties": [1], "value": "inf"}]})");
  REQUIRE(rc_vector_values(inf, values, 1) == RC_OK);
  CHECK(values[0] == HUGE_VAL);
  REQUIRE(rc_vector_to_json(inf, &json) == RC_OK);
  CHECK(take(json).find("\"inf\"") != std::string::npos);
  rc_vector_free(inf);
  rc_vector_free(v);
}

TEST_CASE("synthesize, serialize and verify") {
  rc_vector* target = vec(kTwoParty);
  rc_pair* pair = nullptr;
  char* summary = nullptr;
  REQUIRE(rc_synthesize(target, 1e-6, &pair, &summary) == RC_OK);
  CHECK(!take(summary).empty());
  CHECK(rc_pair_party_count(pair) == 2);

  char* pj = nullptr;
  REQUIRE(rc_pair_to_json(pair, &pj) == RC_OK);
  rc_pair* copy = nullptr;
  REQUIRE(rc_pair_from_json(pj, &copy) == RC_OK);
  rc_string_free(pj);

  rc_vector* achieved = nullptr;
  REQUIRE(rc_pair_re_vector(copy, &achieved) == RC_OK);
  double got[3];
  REQUIRE(rc_vector_values(achieved, got, 3) == RC_OK);
  CHECK(got[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(got[1] == doctest::Approx(0.0));
  CHECK(got[2] == doctest::Approx(2.0).epsilon(1e-9));

  int passed = -1;
  REQUIRE(rc_verify(target, copy, 1e-6, &passed, nullptr) == RC_OK);
  CHECK(passed == 1);

  rc_vector* other = vec(R"({"n": 2, "entries": [{"parties": [1], "value": 1},
      {"parties": [2], "value": 0}, {"parties": [1, 2], "value": 2}]})");
  char* report = nullptr;
  REQUIRE(rc_verify(other, copy, 1e-6, &passed, &report) == RC_OK);
  CHECK(passed == 0);
  CHECK(take(report).find("\"passed\": false") != std::string::npos);

  rc_vector* three = vec(R"({"n": 1, "entries": [{"parties": [1], "value": 0}]})");
  CHECK(rc_verify(three, copy, 1e-6, &passed, nullptr) == RC_ERR_INPUT);

  for (auto* v : {target, achieved, other, three}) rc_vector_free(v);
  rc_pair_free(copy);
  rc_pair_free(pair);
}

TEST_CASE("single rays") {
  const std::vector<std::uint32_t> minimal{0b011, 0b100};
  rc_upset* u = nullptr;
  REQUIRE(rc_upset_from_minimal(3, minimal.data(), minimal.size(), &u) == RC_OK);
  rc_pair* p = nullptr;
  REQUIRE(rc_realize_ray(u, 1.0, &p) == RC_OK);
  rc_vector* v = nullptr;
  REQUIRE(rc_pair_re_vector(p, &v) == RC_OK);
  double got[7];
  REQUIRE(rc_vector_values(v, got, 7) == RC_OK);
  const double want[7] = {0, 0, 1, 1, 1, 1, 1};
  for (int i = 0; i < 7; ++i) CHECK(got[i] == doctest::Approx(want[i]));
  CHECK(rc_realize_ray(u, -1.0, &p) == RC_ERR_PARAMETER);
  rc_vector_free(v);
  rc_pair_free(p);
  rc_upset_free(u);
}

TEST_CASE("reports") {
  char* out = nullptr;
  REQUIRE(rc_rays(3, 1, 1, &out) == RC_OK);
  CHECK(take(out).find("\"upset_count\": 18") != std::string::npos);
  REQUIRE(rc_demo("example5", &out) == RC_OK);
  CHECK(take(out).find("achieved: [1, 0, 0, 1, 1, 1, 1]") != std::string::npos);
}

TEST_CASE("free functions accept null") {
  rc_vector_free(nullptr);
  rc_pair_free(nullptr);
  rc_upset_free(nullptr);
  rc_string_free(nullptr);
}
