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

// Command-line driver over the librelcone C API.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "relcone/relcone.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

struct CStringDeleter {
  void operator()(char* s) const { rc_string_free(s); }
};
using CString = std::unique_ptr<char, CStringDeleter>;

struct VectorDeleter {
  void operator()(rc_vector* v) const { rc_vector_free(v); }
};
using Vector = std::unique_ptr<rc_vector, VectorDeleter>;

struct PairDeleter {
  void operator()(rc_pair* p) const { rc_pair_free(p); }
};
using Pair = std::unique_ptr<rc_pair, PairDeleter>;

// Thrown after a structured error has been written to stderr.
struct Failure {
  int exit_code;
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out;
}

[[noreturn]] void fail(const std::string& status, const std::string& message, int code) {
  std::cerr << "{\"error\": {\"status\": \"" << escape(status) << "\", \"message\": \""
            << escape(message) << "\"}}\n";
  throw Failure{code};
}

void check(rc_status status) {
  if (status == RC_OK) return;
  const int code =
      (status == RC_ERR_DOMAIN || status == RC_ERR_VERIFICATION) ? kExitFalse : kExitError;
  fail(rc_status_name(status), rc_last_error(), code);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("input_error", "cannot open " + path, kExitError);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Vector load_vector(const std::string& path) {
  rc_vector* v = nullptr;
  check(rc_vector_from_json(read_file(path).c_str(), &v));
  return Vector(v);
}

Pair load_pair(const std::string& path) {
  rc_pair* p = nullptr;
  check(rc_pair_from_json(read_file(path).c_str(), &p));
  return Pair(p);
}

void print(const CString& s) {
  std::cout << s.get();
  const std::string text = s.get();
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcone: relative-entropy vectors, the monotonicity cone and their realizations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rc_version()));

  int rays_n = 3;
  bool rays_classes = false;
  bool rays_json = false;
  auto* rays = app.add_subcommand("rays", "List up-set rays for n parties");
  rays->add_option("--n", rays_n, "Party count (1..5)")->required();
  rays->add_flag("--classes", rays_classes, "Group rays into permutation classes");
  rays->add_flag("--json", rays_json, "Emit JSON instead of a table");

  std::string check_file;
  auto* check_cmd = app.add_subcommand("check", "Cone membership of a vector (exit 0 iff member)");
  check_cmd->add_option("FILE", check_file, "Vector JSON")->required();

  std::string decompose_file;
  auto* decompose = app.add_subcommand("decompose", "Layer-cake ray decomposition of a vector");
  decompose->add_option("FILE", decompose_file, "Vector JSON")->required();

  std::string synth_file;
  std::string synth_out;
  double synth_tol = 1e-6;
  auto* synth = app.add_subcommand("synthesize", "Build a state pair realizing a vector");
  synth->add_option("FILE", synth_file, "Vector JSON")->required();
  synth->add_option("-o,--output", synth_out, "State pair JSON output")->required();
  synth->add_option("--tol", synth_tol, "Maximum absolute error in bits")->capture_default_str();

  std::string relent_file;
  auto* relent = app.add_subcommand("relent", "Relative-entropy vector of a state pair");
  relent->add_option("FILE", relent_file, "State pair JSON")->required();

  std::string verify_vec;
  std::string verify_pair;
  double verify_tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "Check a state pair against a target vector");
  verify->add_option("VEC", verify_vec, "Target vector JSON")->required();
  verify->add_option("PAIR", verify_pair, "State pair JSON")->required();
  verify->add_option("--tol", verify_tol, "Maximum absolute error in bits")->capture_default_str();

  std::string demo_name;
  auto* demo = app.add_subcommand("demo", "Worked constructions: example5 | example6");
  demo->add_option("NAME", demo_name, "example5 or example6")
      ->required()
      ->check(CLI::IsMember({"example5", "example6"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*rays) {
      char* out = nullptr;
      check(rc_rays(rays_n, rays_classes ? 1 : 0, rays_json ? 1 : 0, &out));
      print(CString(out));
      return kExitOk;
    }
    if (*check_cmd) {
      Vector v = load_vector(check_file);
      int member = 0;
      char* report = nullptr;
      check(rc_check_membership(v.get(), &member, &report));
      print(CString(report));
      return member ? kExitOk : kExitFalse;
    }
    if (*decompose) {
      Vector v = load_vector(decompose_file);
      char* out = nullptr;
      check(rc_decompose(v.get(), &out));
      print(CString(out));
      return kExitOk;
    }
    if (*synth) {
      Vector v = load_vector(synth_file);
      rc_pair* raw = nullptr;
      char* result = nullptr;
      check(rc_synthesize(v.get(), synth_tol, &raw, &result));
      Pair pair(raw);
      CString summary(result);
      char* pair_json = nullptr;
      check(rc_pair_to_json(pair.get(), &pair_json));
      CString pair_text(pair_json);
      std::ofstream out(synth_out);
      if (!out) fail("input_error", "cannot write " + synth_out, kExitError);
      out << pair_text.get() << '\n';
      print(summary);
      return kExitOk;
    }
    if (*relent) {
      Pair pair = load_pair(relent_file);
      rc_vector* raw = nullptr;
      check(rc_pair_re_vector(pair.get(), &raw));
      Vector v(raw);
      char* out = nullptr;
      check(rc_vector_to_json(v.get(), &out));
      print(CString(out));
      return kExitOk;
    }
    if (*verify) {
      Vector v = load_vector(verify_vec);
      Pair pair = load_pair(verify_pair);
      int passed = 0;
      char* report = nullptr;
      check(rc_verify(v.get(), pair.get(), verify_tol, &passed, &report));
      print(CString(report));
      return passed ? kExitOk : kExitFalse;
    }
    if (*demo) {
      char* out = nullptr;
      check(rc_demo(demo_name.c_str(), &out));
      print(CString(out));
      return kExitOk;
    }
  } catch (const Failure& f) {
    return f.exit_code;
  }
  return kExitError;
}
