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

#include "relcone/io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "relcone/errors.hpp"

namespace relcone {

namespace {

Json bits_json(Bits b) {
  if (b.is_infinite()) return "inf";
  return b.value();
}

Json double_json(double x) {
  if (std::isinf(x)) return "inf";
  return x;
}

Json parties_json(SubsetMask s) { return parties_of(s); }

Json sets_json(const std::vector<SubsetMask>& sets) {
  Json out = Json::array();
  for (SubsetMask s : sets) out.push_back(parties_json(s));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int party_count_field(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) throw InputError("\"n\" must be an integer");
  const int value = n.get<int>();
  check_party_count(value);
  return value;
}

std::uint64_t unsigned_value(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

Rational rational_from_json(const Json& j) {
  try {
    if (j.is_object()) {
      const Json& num = field(j, "num");
      const Json& den = field(j, "den");
      if (!num.is_string() || !den.is_string()) throw InputError("num/den must be strings");
      Rational q{mpz_class(num.get<std::string>(), 10), mpz_class(den.get<std::string>(), 10)};
      if (sgn(q.get_den()) == 0) throw InputError("zero denominator");
      q.canonicalize();
      return q;
    }
    if (j.is_string()) {
      Rational q(j.get<std::string>(), 10);
      q.canonicalize();
      return q;
    }
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational");
  }
  throw InputError("probability must be {\"num\": ..., \"den\": ...}");
}

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

std::vector<Atom> atoms_from_json(const Json& j, int n) {
  if (!j.is_array()) throw InputError("atom list must be an array");
  std::vector<Atom> atoms;
  for (const Json& a : j) {
    const Json& symbols = field(a, "symbols");
    if (!symbols.is_array() || static_cast<int>(symbols.size()) != n) {
      throw InputError("atom symbols must list one symbol per party");
    }
    Atom atom;
    for (const Json& s : symbols) atom.symbols.push_back(unsigned_value(s, "symbol"));
    atom.probability = rational_from_json(field(a, "p"));
    atoms.push_back(std::move(atom));
  }
  return atoms;
}

Json atoms_json(const JointDistribution& d) {
  Json out = Json::array();
  for (const Atom& a : d.atoms()) {
    out.push_back(Json{{"symbols", a.symbols}, {"p", rational_json(a.probability)}});
  }
  return out;
}

std::string number(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

std::string bits_text(Bits b) { return b.is_infinite() ? "inf" : number(b.value()); }

std::string vector_text(const REVector& v) {
  std::string out = "[";
  bool first = true;
  for (Bits b : v.ordered()) {
    if (!first) out += ", ";
    out += bits_text(b);
    first = false;
  }
  return out + "]";
}

std::string sets_text(const std::vector<SubsetMask>& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ", ";
    out += subset_label(sets[i]);
  }
  return out + "}";
}

std::string symbol_text(const PartyLayout& layout, std::uint64_t symbol) {
  const bool wide = std::any_of(layout.registers.begin(), layout.registers.end(),
                                [](std::uint64_t r) { return r > 10; });
  std::string out;
  const auto digits = layout.decode(symbol);
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (wide && i) out += '.';
    out += std::to_string(digits[i]);
  }
  return out;
}

}  // namespace

Json to_json(const REVector& v) {
  Json entries = Json::array();
  for (SubsetMask s : coordinate_order(v.party_count())) {
    entries.push_back(Json{{"parties", parties_json(s)}, {"value", bits_json(v.at(s))}});
  }
  return Json{{"n", v.party_count()}, {"entries", entries}};
}

REVector vector_from_json(const Json& j) {
  const int n = party_count_field(j);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw InputError("\"entries\" must be an array");
  REVector v(n);
  std::vector<bool> seen(full_bits(n) + 1, false);
  for (const Json& e : entries) {
    const Json& parties = field(e, "parties");
    if (!parties.is_array()) throw InputError("\"parties\" must be an array");
    std::vector<int> list;
    for (const Json& p : parties) {
      if (!p.is_number_integer()) throw InputError("party index must be an integer");
      list.push_back(p.get<int>());
    }
    const SubsetMask mask = mask_from_parties(list, n);
    if (seen[mask.bits()]) throw InputError("subset " + subset_label(mask) + " listed twice");
    seen[mask.bits()] = true;
    const Json& value = field(e, "value");
    if (value.is_string()) {
      const std::string text = value.get<std::string>();
      if (text != "inf" && text != "+inf" && text != "Infinity") {
        throw InputError("unrecognized value \"" + text + "\"");
      }
      v.set(mask, Bits::infinity());
    } else if (value.is_number()) {
      v.set(mask, Bits::finite(value.get<double>()));
    } else {
      throw InputError("\"value\" must be a number or \"inf\"");
    }
  }
  for (std::uint32_t s = 1; s <= full_bits(n); ++s) {
    if (!seen[s]) throw InputError("missing entry for subset " + subset_label(SubsetMask(s)));
  }
  return v;
}

Json to_json(const JointDistribution& d) {
  Json sizes = Json::array();
  Json registers = Json::array();
  for (const PartyLayout& p : d.layout()) {
    sizes.push_back(p.alphabet_size());
    registers.push_back(p.registers);
  }
  return Json{{"n", d.party_count()},
              {"alphabet_sizes", sizes},
              {"registers", registers},
              {"atoms", atoms_json(d)}};
}

Json to_json(const StatePair& pair) {
  Json sizes = Json::array();
  Json registers = Json::array();
  for (const PartyLayout& p : pair.rho.layout()) {
    sizes.push_back(p.alphabet_size());
    registers.push_back(p.registers);
  }
  return Json{{"n", pair.party_count()},
              {"alphabet_sizes", sizes},
              {"registers", registers},
              {"rho", atoms_json(pair.rho)},
              {"sigma", atoms_json(pair.sigma)}};
}

StatePair pair_from_json(const Json& j) {
  const int n = party_count_field(j);
  const Json& sizes = field(j, "alphabet_sizes");
  if (!sizes.is_array() || static_cast<int>(sizes.size()) != n) {
    throw InputError("\"alphabet_sizes\" must list one size per party");
  }
  std::vector<PartyLayout> layout(n);
  if (j.contains("registers")) {
    const Json& regs = j.at("registers");
    if (!regs.is_array() || static_cast<int>(regs.size()) != n) {
      throw InputError("\"registers\" must list one register list per party");
    }
    for (int i = 0; i < n; ++i) {
      if (!regs[i].is_array()) throw InputError("register list must be an array");
      for (const Json& r : regs[i]) layout[i].registers.push_back(unsigned_value(r, "register size"));
    }
  }
  for (int i = 0; i < n; ++i) {
    const std::uint64_t size = unsigned_value(sizes[i], "alphabet size");
    if (layout[i].registers.empty()) layout[i].registers.push_back(size);
    if (layout[i].alphabet_size() != size) {
      throw InputError("registers of party " + std::to_string(i + 1) +
                       " do not multiply to its alphabet size");
    }
  }
  JointDistribution rho(layout, atoms_from_json(field(j, "rho"), n));
  JointDistribution sigma(layout, atoms_from_json(field(j, "sigma"), n));
  return StatePair(std::move(rho), std::move(sigma));
}

Json to_json(const MembershipReport& r, int n) {
  Json violations = Json::array();
  for (const Violation& v : r.violations) {
    violations.push_back(Json{{"superset", parties_json(v.superset)},
                              {"subset", parties_json(v.subset)},
                              {"superset_value", v.superset_value},
                              {"subset_value", v.subset_value}});
  }
  return Json{{"n", n},
              {"member", r.member},
              {"infinite_part_ok", r.infinite_part_ok},
              {"violations", violations}};
}

Json to_json(const RayDecomposition& d) {
  Json terms = Json::array();
  for (const RayTerm& t : d.terms) {
    terms.push_back(Json{{"coefficient", t.coefficient},
                         {"minimal_sets", sets_json(minimal_sets(t.upset))},
                         {"members", sets_json(t.upset.members())},
                         {"indicator", t.upset.indicator()}});
  }
  return Json{{"n", d.n}, {"terms", terms}};
}

Json to_json(const VerificationReport& r) {
  Json subsets = Json::array();
  for (const SubsetDeviation& d : r.subsets) {
    subsets.push_back(Json{{"parties", parties_json(d.subset)},
                           {"target", bits_json(d.target)},
                           {"achieved", bits_json(d.achieved)},
                           {"deviation", double_json(d.deviation)}});
  }
  return Json{{"passed", r.passed},
              {"tolerance", r.tolerance},
              {"max_abs_error", double_json(r.max_abs_error)},
              {"achieved_monotone", r.achieved_monotone},
              {"failing", sets_json(r.failing)},
              {"subsets", subsets}};
}

Json to_json(const RealizationResult& r) {
  std::size_t atoms = r.pair.rho.support_size();
  return Json{{"target", to_json(r.target)},
              {"decomposition", to_json(r.decomposition)},
              {"achieved", to_json(r.achieved)},
              {"max_abs_error", r.max_abs_error},
              {"tolerance", r.tolerance},
              {"rho_support", atoms},
              {"sigma_support", r.pair.sigma.support_size()}};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

std::string format_atoms(const JointDistribution& d) {
  std::string out;
  for (const Atom& a : d.atoms()) {
    out += "  " + to_string(a.probability) + " |";
    for (int i = 0; i < d.party_count(); ++i) {
      if (i) out += ' ';
      out += symbol_text(d.layout()[i], a.symbols[i]);
    }
    out += ">\n";
  }
  return out;
}

Json rays_json(int n, bool classes) {
  const auto upsets = enumerate_upsets(n);
  Json labels = Json::array();
  for (SubsetMask s : coordinate_order(n)) labels.push_back(subset_label(s));
  Json rows = Json::array();
  if (classes) {
    int index = 1;
    for (const OrbitClass& c : permutation_classes(upsets, n)) {
      rows.push_back(Json{{"ray", index++},
                          {"indicator", c.representative.indicator()},
                          {"minimal_sets", sets_json(minimal_sets(c.representative))},
                          {"orbit_size", c.size}});
    }
  } else {
    int index = 1;
    for (const UpSet& u : upsets) {
      rows.push_back(Json{{"ray", index++},
                          {"indicator", u.indicator()},
                          {"minimal_sets", sets_json(minimal_sets(u))}});
    }
  }
  return Json{{"n", n},
              {"upset_count", upsets.size()},
              {"coordinates", labels},
              {classes ? "classes" : "rays", rows}};
}

std::string format_rays(int n, bool classes) {
  const Json j = rays_json(n, classes);
  const auto order = coordinate_order(n);
  std::ostringstream os;
  os << "# n=" << n << "  up-sets: " << j["upset_count"].get<std::size_t>();
  if (classes) os << "  permutation classes: " << j["classes"].size();
  os << "\n";
  std::vector<std::size_t> width;
  os << std::left << std::setw(6) << "ray";
  for (SubsetMask s : order) {
    const std::string label = subset_label(s);
    width.push_back(label.size());
    os << label << ' ';
  }
  if (classes) os << " orbit";
  os << "  minimal\n";
  for (const Json& row : j[classes ? "classes" : "rays"]) {
    os << std::left << std::setw(6) << row["ray"].get<int>();
    const auto& ind = row["indicator"];
    for (std::size_t i = 0; i < order.size(); ++i) {
      os << std::left << std::setw(static_cast<int>(width[i]) + 1) << ind[i].get<int>();
    }
    if (classes) os << ' ' << std::left << std::setw(5) << row["orbit_size"].get<std::size_t>();
    os << "  {";
    bool first = true;
    for (const Json& set : row["minimal_sets"]) {
      if (!first) os << ", ";
      first = false;
      for (const Json& p : set) os << static_cast<char>('A' + p.get<int>() - 1);
    }
    os << "}\n";
  }
  return os.str();
}

std::string format_demo(const Demo& demo) {
  std::ostringstream os;
  const int n = demo.pair.party_count();
  const VerificationReport report = verify(demo.target, demo.pair, kExactTolerance);
  const SchemeVerification audit = verify_scheme(demo.scheme, demo.structure);
  os << "# " << demo.name << "\n";
  os << "parties: " << n << "\n";
  os << "registers:";
  for (int i = 0; i < n; ++i) {
    os << ' ' << static_cast<char>('A' + i) << '[';
    const auto& regs = demo.scheme.registers()[i];
    for (std::size_t r = 0; r < regs.size(); ++r) os << (r ? "," : "") << regs[r];
    os << ']';
  }
  os << "\n";
  os << "authorized (minimal): " << sets_text(minimal_sets(demo.structure.upset)) << "\n";
  os << "scheme audit: " << (audit.passed ? "pass" : "FAIL") << "\n";
  os << "coordinates: [";
  const auto order = coordinate_order(n);
  for (std::size_t i = 0; i < order.size(); ++i) os << (i ? ", " : "") << subset_label(order[i]);
  os << "]\n";
  os << "target:   " << vector_text(demo.target) << "\n";
  os << "achieved: " << vector_text(report.achieved) << "\n";
  os << "max_abs_error: " << number(report.max_abs_error) << "\n";
  os << "verify(tol=" << number(kExactTolerance) << "): " << (report.passed ? "pass" : "FAIL")
     << "\n";
  os << "rho(0) support " << demo.scheme.state(0).support_size() << ", rho(1) support "
     << demo.scheme.state(1).support_size() << "\n";
  for (SubsetMask s : demo.highlights) {
    const JointDistribution r = marginal(demo.pair.rho, s);
    const JointDistribution q = marginal(demo.pair.sigma, s);
    const std::string label = subset_label(s);
    os << "\nrho_" << label << ":\n" << format_atoms(r);
    os << "sigma_" << label << ":\n" << format_atoms(q);
    os << "D(rho_" << label << " || sigma_" << label
       << ") = " << bits_text(relative_entropy(r, q)) << "\n";
  }
  return os.str();
}

}  // namespace relcone
