// Copyright 2026 The elwq authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "elwq/json_io.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace elwq {

namespace {

using nlohmann::json;

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json quaternion_to_array(const Quaternion& q) {
  return json::array({q[0], q[1], q[2], q[3]});
}

json report_to_object(const NashReport& rep) {
  json j;
  j["verdict"] = rep.verdict;
  j["type"] = json::array({rep.type_m, rep.type_n});
  j["payoffs"] = json::array({rep.payoffs.first, rep.payoffs.second});
  j["residuals"] = json::array({rep.residual_a, rep.residual_b});
  j["top_gap"] = rep.top_gap;  // non-finite values dump as null
  return j;
}

json oracle_to_object(const OracleResult& o) {
  json j;
  j["ok"] = o.ok;
  j["gain_a"] = o.gain_a;
  j["gain_b"] = o.gain_b;
  j["epsilon"] = o.epsilon_used;
  j["epsilon_bound"] = o.epsilon_bound;
  return j;
}

json strategy_to_object(const MixedStrategy& mu) {
  json atoms = json::array();
  for (const WeightedAtom& a : mu.atoms)
    atoms.push_back(json{{"w", a.w}, {"q", quaternion_to_array(a.q)}});
  return json{{"atoms", atoms}};
}

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& s) {
  std::string t = trimmed(s);
  if (t.empty()) throw std::invalid_argument("empty number");
  size_t used = 0;
  double v;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number: '" + s + "'");
  }
  if (used != t.size())
    throw std::invalid_argument("trailing junk in number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string quaternion_to_string(const Quaternion& q) {
  return full_precision(q[0]) + "," + full_precision(q[1]) + "," +
         full_precision(q[2]) + "," + full_precision(q[3]);
}

std::string complex_to_string(const Complex& z) {
  std::string s = full_precision(z.real());
  s += z.imag() < 0 ? "-" : "+";
  s += full_precision(std::abs(z.imag()));
  s += "i";
  return s;
}

std::string su2_to_string(const CMat2& u) {
  return complex_to_string(u[0][0]) + "," + complex_to_string(u[0][1]) + "," +
         complex_to_string(u[1][0]) + "," + complex_to_string(u[1][1]);
}

std::string strategy_to_json(const MixedStrategy& mu, int indent) {
  return strategy_to_object(mu).dump(indent);
}

std::string canonical_to_json(const CanonicalStrategy& c, int indent) {
  json atoms = json::array();
  for (size_t i = 0; i < c.probs.size(); ++i)
    atoms.push_back(
        json{{"w", c.probs[i]}, {"q", quaternion_to_array(c.supports[i])}});
  json j{{"atoms", atoms}, {"canonical", true}};
  return j.dump(indent);
}

MixedStrategy strategy_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array())
    throw std::invalid_argument("strategy JSON must contain an atoms array");
  MixedStrategy mu;
  for (const json& a : j["atoms"]) {
    if (!a.is_object() || !a.contains("w") || !a.contains("q") ||
        !a["q"].is_array() || a["q"].size() != 4)
      throw std::invalid_argument(
          "each atom needs a weight w and a 4-vector q");
    WeightedAtom atom;
    atom.w = a["w"].get<double>();
    for (int i = 0; i < 4; ++i) atom.q[i] = a["q"][i].get<double>();
    mu.atoms.push_back(atom);
  }
  return mu;
}

std::string nash_report_to_json(const NashReport& rep,
                                const OracleResult* oracle, int indent) {
  json j = report_to_object(rep);
  if (oracle != nullptr) j["oracle"] = oracle_to_object(*oracle);
  return j.dump(indent);
}

std::string nash_report_to_human(const NashReport& rep) {
  char buf[256];
  std::ostringstream os;
  os << "verdict   " << (rep.verdict ? "equilibrium" : "not an equilibrium")
     << "\n";
  std::snprintf(buf, sizeof buf, "type      (%d,%d)\n", rep.type_m,
                rep.type_n);
  os << buf;
  std::snprintf(buf, sizeof buf, "payoffs   %12.6f %12.6f\n",
                rep.payoffs.first, rep.payoffs.second);
  os << buf;
  std::snprintf(buf, sizeof buf, "residuals %12.3e %12.3e\n", rep.residual_a,
                rep.residual_b);
  os << buf;
  if (std::isfinite(rep.top_gap))
    std::snprintf(buf, sizeof buf, "top gap   %12.6f\n", rep.top_gap);
  else
    std::snprintf(buf, sizeof buf, "top gap   %12s\n", "none (scalar)");
  os << buf;
  return os.str();
}

std::string scan_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "case,params,gap,residual_a,residual_b,verdict\n";
  for (const ScanRow& r : rows) {
    os << r.case_label << ",\"" << r.params << "\"," << full_precision(r.gap)
       << "," << full_precision(r.residual_a) << ","
       << full_precision(r.residual_b) << "," << (r.verdict ? "true" : "false")
       << "\n";
  }
  return os.str();
}

namespace {

json catalogue_entry_to_object(const CatalogueEntry& e) {
  json j;
  j["kind"] = e.kind;
  j["theta_grid"] = e.theta_grid;
  json rotors = json::array();
  for (const Quaternion& r : e.rotors) rotors.push_back(quaternion_to_array(r));
  j["rotors"] = rotors;
  j["signs"] = e.signs;
  j["report"] = report_to_object(e.representative);
  j["oracle"] = oracle_to_object(e.oracle);
  j["flagged"] = e.flagged;
  if (e.flagged) j["flag"] = e.flag;
  return j;
}

}  // namespace

std::string catalogue_to_json(const std::vector<CatalogueEntry>& entries,
                              int indent) {
  json arr = json::array();
  for (const CatalogueEntry& e : entries)
    arr.push_back(catalogue_entry_to_object(e));
  return arr.dump(indent);
}

std::string classification_to_json(const ClassificationReport& report,
                                   int indent) {
  json j;
  j["genericity"] = json{{"generic", report.genericity.generic},
                         {"violations", report.genericity.violations}};
  j["refused"] = report.refused;
  j["payoff_condition"] = report.payoff_condition;
  json cases = json::array();
  for (const CaseResult& c : report.cases) {
    json jc;
    jc["label"] = c.label;
    jc["summary"] = c.summary;
    jc["notes"] = c.notes;
    json findings = json::array();
    for (const Finding& f : c.findings) {
      json jf;
      jf["description"] = f.description;
      jf["mu"] = strategy_to_object(f.mu);
      jf["nu"] = strategy_to_object(f.nu);
      jf["report"] = report_to_object(f.report);
      if (f.has_oracle) jf["oracle"] = oracle_to_object(f.oracle);
      jf["flagged"] = f.flagged;
      if (f.flagged) jf["flag"] = f.flag;
      findings.push_back(jf);
    }
    jc["findings"] = findings;
    jc["scan_rows"] = c.scan.size();
    cases.push_back(jc);
  }
  j["cases"] = cases;
  json cat = json::array();
  for (const CatalogueEntry& e : report.catalogue)
    cat.push_back(catalogue_entry_to_object(e));
  j["catalogue"] = cat;
  j["config"] = json{{"oracle_grid", report.config.oracle.grid_size},
                     {"oracle_epsilon", report.config.oracle.epsilon},
                     {"seed", report.config.seed},
                     {"case_b_grid", report.config.case_b_grid}};
  return j.dump(indent);
}

Quaternion parse_quaternion_literal(const std::string& text) {
  std::string t = trimmed(text);
  if (t.empty()) throw std::invalid_argument("empty quaternion literal");

  // Signed basis names.
  double sign = 1.0;
  std::string body = t;
  if (body[0] == '+' || body[0] == '-') {
    sign = body[0] == '-' ? -1.0 : 1.0;
    body = trimmed(body.substr(1));
  }
  if (body.size() == 2 && (body[0] == 'e' || body[0] == 'E') &&
      body[1] >= '0' && body[1] <= '3') {
    return scale(Quaternion::basis(body[1] - '0'), sign);
  }

  if (t[0] == '[') {
    json j;
    try {
      j = json::parse(t);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("invalid JSON quaternion: ") +
                                  e.what());
    }
    if (!j.is_array() || j.size() != 4)
      throw std::invalid_argument("JSON quaternion must be a 4-array");
    Quaternion q;
    for (int i = 0; i < 4; ++i) q[i] = j[i].get<double>();
    return q;
  }

  std::vector<std::string> parts = split(t, ',');
  if (parts.size() != 4)
    throw std::invalid_argument("quaternion literal needs four components: '" +
                                text + "'");
  Quaternion q;
  for (int i = 0; i < 4; ++i) q[i] = parse_real(parts[i]);
  return q;
}

Complex parse_complex_literal(const std::string& text) {
  std::string t = trimmed(text);
  if (t.empty()) throw std::invalid_argument("empty complex literal");
  // Strip internal spaces; they only ever separate sign and digits here.
  std::string s;
  for (char ch : t)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;

  bool has_i = s.back() == 'i' || s.back() == 'I';
  if (!has_i) return Complex(parse_real(s), 0.0);
  s.pop_back();

  // Split at the last top-level +/- that is not an exponent sign.
  size_t cut = std::string::npos;
  for (size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) {
    // Pure imaginary: "i", "-i", "2i", ...
    if (s.empty() || s == "+") return Complex(0.0, 1.0);
    if (s == "-") return Complex(0.0, -1.0);
    return Complex(0.0, parse_real(s));
  }
  double re = parse_real(s.substr(0, cut));
  std::string im = s.substr(cut);
  if (im == "+") return Complex(re, 1.0);
  if (im == "-") return Complex(re, -1.0);
  return Complex(re, parse_real(im));
}

CMat2 parse_su2_entries(const std::string& text) {
  std::vector<std::string> parts = split(trimmed(text), ',');
  if (parts.size() != 4)
    throw std::invalid_argument(
        "SU(2) input needs four comma-separated complex entries");
  CMat2 u;
  u[0][0] = parse_complex_literal(parts[0]);
  u[0][1] = parse_complex_literal(parts[1]);
  u[1][0] = parse_complex_literal(parts[2]);
  u[1][1] = parse_complex_literal(parts[3]);
  return u;
}

MixedStrategy parse_strategy_text(const std::string& text) {
  std::string t = trimmed(text);
  if (!t.empty() && t[0] == '{') return strategy_from_json(t);
  return MixedStrategy::point(parse_quaternion_literal(t));
}

}  // namespace elwq
