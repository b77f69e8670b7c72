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

#include "relcone/relcone.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "relcone/errors.hpp"
#include "relcone/io.hpp"
#include "relcone/realize.hpp"

struct rc_vector {
  relcone::REVector value;
};

struct rc_pair {
  relcone::StatePair value;
};

struct rc_upset {
  relcone::UpSet value;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
rc_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return RC_OK;
  } catch (const relcone::InputError& e) {
    last_error = e.what();
    return RC_ERR_INPUT;
  } catch (const relcone::DomainError& e) {
    last_error = e.what();
    return RC_ERR_DOMAIN;
  } catch (const relcone::ParameterError& e) {
    last_error = e.what();
    return RC_ERR_PARAMETER;
  } catch (const relcone::UnsupportedError& e) {
    last_error = e.what();
    return RC_ERR_UNSUPPORTED;
  } catch (const relcone::VerificationError& e) {
    last_error = e.what();
    return RC_ERR_VERIFICATION;
  } catch (const std::exception& e) {
    last_error = e.what();
    return RC_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return RC_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw relcone::InputError(std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* rc_version(void) { return "1.0.0"; }

const char* rc_status_name(rc_status status) {
  switch (status) {
    case RC_OK: return "ok";
    case RC_ERR_INPUT: return "input_error";
    case RC_ERR_DOMAIN: return "domain_error";
    case RC_ERR_PARAMETER: return "parameter_error";
    case RC_ERR_UNSUPPORTED: return "unsupported";
    case RC_ERR_VERIFICATION: return "verification_error";
    case RC_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* rc_last_error(void) { return last_error.c_str(); }

void rc_string_free(char* s) { std::free(s); }

rc_status rc_vector_from_json(const char* json, rc_vector** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    auto v = relcone::vector_from_json(relcone::parse_json(json));
    *out = new rc_vector{std::move(v)};
  });
}

rc_status rc_vector_to_json(const rc_vector* v, char** json) {
  return guarded([&] {
    require(v, "vector");
    require(json, "output");
    *json = duplicate(relcone::to_json(v->value).dump(2));
  });
}

int rc_vector_party_count(const rc_vector* v) { return v ? v->value.party_count() : 0; }

rc_status rc_vector_values(const rc_vector* v, double* values, size_t capacity) {
  return guarded([&] {
    require(v, "vector");
    require(values, "values");
    const auto ordered = v->value.ordered();
    if (capacity < ordered.size()) throw relcone::InputError("values buffer too small");
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      values[i] = ordered[i].is_infinite() ? HUGE_VAL : ordered[i].value();
    }
  });
}

void rc_vector_free(rc_vector* v) { delete v; }

rc_status rc_check_membership(const rc_vector* v, int* is_member, char** report_json) {
  return guarded([&] {
    require(v, "vector");
    require(is_member, "output");
    const auto report = relcone::check_membership(v->value);
    *is_member = report.member ? 1 : 0;
    if (report_json) {
      *report_json = duplicate(relcone::to_json(report, v->value.party_count()).dump(2));
    }
  });
}

rc_status rc_decompose(const rc_vector* v, char** json) {
  return guarded([&] {
    require(v, "vector");
    require(json, "output");
    *json = duplicate(relcone::to_json(relcone::layer_cake_decompose(v->value)).dump(2));
  });
}

rc_status rc_pair_from_json(const char* json, rc_pair** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "output");
    auto p = relcone::pair_from_json(relcone::parse_json(json));
    *out = new rc_pair{std::move(p)};
  });
}

rc_status rc_pair_to_json(const rc_pair* p, char** json) {
  return guarded([&] {
    require(p, "pair");
    require(json, "output");
    *json = duplicate(relcone::to_json(p->value).dump());
  });
}

int rc_pair_party_count(const rc_pair* p) { return p ? p->value.party_count() : 0; }

rc_status rc_pair_re_vector(const rc_pair* p, rc_vector** out) {
  return guarded([&] {
    require(p, "pair");
    require(out, "output");
    *out = new rc_vector{relcone::re_vector(p->value)};
  });
}

void rc_pair_free(rc_pair* p) { delete p; }

rc_status rc_synthesize(const rc_vector* target, double tol, rc_pair** pair,
                        char** result_json) {
  return guarded([&] {
    require(target, "target");
    require(pair, "output");
    auto result = relcone::synthesize(target->value, tol);
    if (result_json) *result_json = duplicate(relcone::to_json(result).dump(2));
    *pair = new rc_pair{std::move(result.pair)};
  });
}

rc_status rc_verify(const rc_vector* target, const rc_pair* pair, double tol, int* passed,
                    char** report_json) {
  return guarded([&] {
    require(target, "target");
    require(pair, "pair");
    require(passed, "output");
    const auto report = relcone::verify(target->value, pair->value, tol);
    *passed = report.passed ? 1 : 0;
    if (report_json) *report_json = duplicate(relcone::to_json(report).dump(2));
  });
}

rc_status rc_upset_from_minimal(int n, const uint32_t* masks, size_t count, rc_upset** out) {
  return guarded([&] {
    require(out, "output");
    if (count > 0) require(masks, "masks");
    std::vector<relcone::SubsetMask> seed;
    for (size_t i = 0; i < count; ++i) seed.emplace_back(masks[i]);
    *out = new rc_upset{relcone::upward_closure(seed, n)};
  });
}

rc_status rc_realize_ray(const rc_upset* u, double lambda, rc_pair** out) {
  return guarded([&] {
    require(u, "up-set");
    require(out, "output");
    *out = new rc_pair{relcone::realize_ray(u->value, lambda)};
  });
}

void rc_upset_free(rc_upset* u) { delete u; }

rc_status rc_rays(int n, int classes, int as_json, char** out) {
  return guarded([&] {
    require(out, "output");
    *out = duplicate(as_json ? relcone::rays_json(n, classes != 0).dump(2) + "\n"
                             : relcone::format_rays(n, classes != 0));
  });
}

rc_status rc_demo(const char* name, char** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "output");
    const std::string which = name;
    if (which == "example5") {
      *out = duplicate(relcone::format_demo(relcone::example5_demo()));
    } else if (which == "example6") {
      *out = duplicate(relcone::format_demo(relcone::example6_demo()));
    } else {
      throw relcone::InputError("unknown demo \"" + which + "\" (expected example5 or example6)");
    }
  });
}

}  // extern "C"
