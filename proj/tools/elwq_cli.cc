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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "elwq/classifier.h"
#include "elwq/game.h"
#include "elwq/json_io.h"

namespace {

using namespace elwq;

constexpr int kExitVerified = 0;
constexpr int kExitNotVerified = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonGeneric = 3;

ClassicalPayoffs parse_payoffs(const std::string& text) {
  Quaternion v = parse_quaternion_literal(text);  // same four-real grammar
  return ClassicalPayoffs(v.c);
}

// Strategy argument: an existing file path (contents parsed) or an inline
// literal / JSON object.
MixedStrategy load_strategy(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_strategy_text(ss.str());
  }
  return parse_strategy_text(arg);
}

struct GlobalOpts {
  std::string payoffs = "3,5,0,1";
  std::string format = "human";
};

int cmd_payoff(const GlobalOpts& g, double gamma, bool /*identity*/,
               const std::string& pa, const std::string& qb,
               const std::string& ua, const std::string& ub) {
  ClassicalPayoffs payoffs = parse_payoffs(g.payoffs);

  CMat2 u_a = alice_to_su2(Quaternion::basis(0));  // identity
  CMat2 u_b = bob_to_su2(Quaternion::basis(0));
  if (!ua.empty()) {
    u_a = parse_su2_entries(ua);
    validate_su2(u_a);
  } else if (!pa.empty()) {
    Quaternion p = ensure_unit(parse_quaternion_literal(pa));
    u_a = strategy_unitaries(p, Quaternion::basis(0)).first;
  }
  if (!ub.empty()) {
    u_b = parse_su2_entries(ub);
    validate_su2(u_b);
  } else if (!qb.empty()) {
    Quaternion q = ensure_unit(parse_quaternion_literal(qb));
    u_b = strategy_unitaries(Quaternion::basis(0), q).second;
  }

  auto hp = payoff_hilbert(GateOperator(gamma), u_a, u_b, payoffs);
  bool maximal = std::abs(gamma - std::numbers::pi / 2) < 1e-12;
  std::optional<std::pair<double, double>> qp;
  if (maximal) {
    auto [p, q] = strategy_quaternions(u_a, u_b);
    qp = payoff_quaternion(p, q, payoffs);
  }

  if (g.format == "json") {
    std::ostringstream os;
    os.precision(17);
    os << "{\"gamma\":" << gamma << ",\"payoffs\":[" << hp.first << ","
       << hp.second << "],\"hilbert\":[" << hp.first << "," << hp.second
       << "]";
    if (qp) {
      double diff = std::max(std::abs(qp->first - hp.first),
                             std::abs(qp->second - hp.second));
      os << ",\"quaternion\":[" << qp->first << "," << qp->second
         << "],\"difference\":" << diff;
    }
    os << "}";
    std::cout << os.str() << "\n";
  } else {
    std::printf("payoffs    %12.6f %12.6f\n", hp.first, hp.second);
    std::printf("hilbert    %12.6f %12.6f   (gamma=%g)\n", hp.first, hp.second,
                gamma);
    if (qp) {
      double diff = std::max(std::abs(qp->first - hp.first),
                             std::abs(qp->second - hp.second));
      std::printf("quaternion %12.6f %12.6f\n", qp->first, qp->second);
      std::printf("difference %12.3e\n", diff);
    }
  }
  return kExitVerified;
}

int cmd_verify(const GlobalOpts& g, const std::string& file_a,
               const std::string& file_b, double tol, double cluster_tol,
               bool with_oracle, int grid, uint64_t seed) {
  ClassicalPayoffs payoffs = parse_payoffs(g.payoffs);
  MixedStrategy mu = load_strategy(file_a);
  MixedStrategy nu = load_strategy(file_b);

  NashReport rep = verify_nash(mu, nu, payoffs, tol, cluster_tol);
  OracleResult oracle;
  if (with_oracle) {
    OracleConfig ocfg;
    ocfg.grid_size = grid;
    ocfg.seed = seed;
    oracle = epsilon_nash_oracle(mu, nu, payoffs, ocfg);
  }

  if (g.format == "json") {
    std::cout << nash_report_to_json(rep, with_oracle ? &oracle : nullptr)
              << "\n";
  } else {
    std::cout << nash_report_to_human(rep);
    if (with_oracle)
      std::printf("oracle    %s (gains %.3e %.3e, bound %.3e)\n",
                  oracle.ok ? "consistent" : "INCONSISTENT", oracle.gain_a,
                  oracle.gain_b, oracle.epsilon_bound);
  }
  return rep.verdict ? kExitVerified : kExitNotVerified;
}

int cmd_family(const GlobalOpts& g, double theta, const std::string& r_text,
               int sign, bool self_verify) {
  ClassicalPayoffs payoffs = parse_payoffs(g.payoffs);
  Quaternion r = parse_quaternion_literal(r_text);
  auto [mu, nu] = equilibrium_family(theta, r, sign);  // validates unit r
  FamilySU2 su2 = family_to_su2(theta, r);

  NashReport rep;
  if (self_verify) rep = verify_nash(mu, nu, payoffs);

  if (g.format == "json") {
    std::ostringstream os;
    os << "{\"theta\":" << theta << ",\"sign\":" << sign << ",\"alice\":"
       << strategy_to_json(mu) << ",\"bob\":" << strategy_to_json(nu)
       << ",\"alice_su2\":[\"" << su2_to_string(su2.u_a1) << "\",\""
       << su2_to_string(su2.u_a2) << "\"],\"bob_su2\":[\""
       << su2_to_string(su2.u_b1) << "\",\"" << su2_to_string(su2.u_b2)
       << "\"]";
    if (self_verify) os << ",\"report\":" << nash_report_to_json(rep);
    os << "}";
    std::cout << os.str() << "\n";
  } else {
    std::printf("theta = %g, sign = %+d\n", theta, sign);
    std::printf("alice atoms: %s | %s\n",
                quaternion_to_string(mu.atoms[0].q).c_str(),
                quaternion_to_string(mu.atoms[1].q).c_str());
    std::printf("bob atoms:   %s | %s\n",
                quaternion_to_string(nu.atoms[0].q).c_str(),
                quaternion_to_string(nu.atoms[1].q).c_str());
    std::printf("alice SU(2): %s | %s\n", su2_to_string(su2.u_a1).c_str(),
                su2_to_string(su2.u_a2).c_str());
    std::printf("bob SU(2):   %s | %s\n", su2_to_string(su2.u_b1).c_str(),
                su2_to_string(su2.u_b2).c_str());
    if (self_verify) std::cout << nash_report_to_human(rep);
  }
  if (self_verify && !rep.verdict) return kExitNotVerified;
  return kExitVerified;
}

int cmd_classify(const GlobalOpts& g, const std::string& case_filter, int grid,
                 uint64_t seed, const std::string& csv_out) {
  ClassicalPayoffs payoffs = parse_payoffs(g.payoffs);
  GenericityReport gen = genericity_check(payoffs);
  if (!gen.generic) {
    std::cerr << "non-generic payoffs:";
    for (const std::string& v : gen.violations) std::cerr << " " << v;
    std::cerr << "\n";
    return kExitNonGeneric;
  }

  ClassifierConfig cfg;
  cfg.oracle.grid_size = grid;
  cfg.oracle.seed = seed;
  cfg.seed = seed;

  ClassificationReport report;
  if (case_filter == "all") {
    report = classify_all(payoffs, cfg);
  } else {
    report.genericity = gen;
    report.payoff_condition = payoff_condition_check(payoffs);
    report.config = cfg;
    if (case_filter == "N1") {
      report.cases.push_back(classify_N1(payoffs, cfg.oracle));
    } else if (case_filter == "N2-axis") {
      report.cases.push_back(classify_N2_axis(payoffs, cfg.oracle));
    } else if (case_filter == "N2-caseA") {
      report.cases.push_back(
          classify_N2_caseA(payoffs, cfg.case_a, cfg.oracle));
    } else if (case_filter == "N2-caseB") {
      report.cases.push_back(classify_N2_caseB(
          payoffs, imaginary_sphere_grid(cfg.case_b_grid, seed), cfg.oracle));
    } else if (case_filter == "M3" || case_filter == "M4") {
      report.cases.push_back(classify_M34(payoffs));
    } else if (case_filter == "N3plus-i" || case_filter == "N3plus-ii") {
      report.cases.push_back(classify_N3plus(payoffs, cfg.n3, cfg.oracle));
    } else {
      std::cerr << "unknown case label: " << case_filter << "\n";
      return kExitInputError;
    }
  }

  std::vector<ScanRow> rows;
  for (const CaseResult& c : report.cases)
    for (const ScanRow& r : c.scan)
      if (case_filter == "all" || r.case_label == case_filter ||
          c.label == case_filter)
        rows.push_back(r);

  if (!csv_out.empty()) {
    std::ofstream out(csv_out);
    out << scan_to_csv(rows);
  }

  if (g.format == "csv") {
    std::cout << scan_to_csv(rows);
  } else if (g.format == "json") {
    std::cout << classification_to_json(report, 2) << "\n";
  } else {
    for (const CaseResult& c : report.cases) {
      std::printf("[%s] %s\n", c.label.c_str(), c.summary.c_str());
      for (const std::string& n : c.notes) std::printf("  note: %s\n",
                                                       n.c_str());
      for (const Finding& f : c.findings) {
        std::printf("  finding: %s%s\n", f.description.c_str(),
                    f.flagged ? ("  [" + f.flag + "]").c_str() : "");
        std::cout << nash_report_to_human(f.report);
      }
    }
    for (const CatalogueEntry& e : report.catalogue) {
      std::printf("catalogue: %s%s\n", e.kind.c_str(),
                  e.flagged ? ("  [" + e.flag + "]").c_str() : "");
      std::cout << nash_report_to_human(e.representative);
    }
  }
  return kExitVerified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elwq: quaternionic engine, Nash verifier, and equilibrium "
               "classifier for a 2x2 quantum game"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--payoffs", g.payoffs, "payoff vector a,b,c,d");
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "human"}));

  // payoff
  auto* payoff = app.add_subcommand("payoff", "evaluate both payoff engines");
  double gamma = std::numbers::pi / 2;
  bool identity = false;
  std::string pa, qb, ua, ub;
  payoff->add_option("--gamma", gamma, "entangling parameter in [0, pi/2]");
  payoff->add_flag("--identity", identity, "both players play the identity");
  payoff->add_option("--pA", pa, "Alice's strategy as a quaternion literal");
  payoff->add_option("--qB", qb, "Bob's strategy as a quaternion literal");
  payoff->add_option("--uA", ua, "Alice's SU(2): four complex entries");
  payoff->add_option("--uB", ub, "Bob's SU(2): four complex entries");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a Nash equilibrium");
  std::string file_a, file_b;
  double tol = kDefaultMembershipTol, cluster_tol = kDefaultClusterTol;
  bool with_oracle = false;
  int grid = 4096;
  uint64_t seed = 12345;
  verify->add_option("alice", file_a, "Alice strategy (file or literal)")
      ->required();
  verify->add_option("bob", file_b, "Bob strategy (file or literal)")
      ->required();
  verify->add_option("--tol", tol, "membership residual tolerance");
  verify->add_option("--cluster-tol", cluster_tol,
                     "eigenvalue clustering tolerance");
  verify->add_flag("--oracle", with_oracle, "run the grid deviation oracle");
  verify->add_option("--grid", grid, "oracle grid size");
  verify->add_option("--seed", seed, "oracle grid seed");

  // family
  auto* family = app.add_subcommand("family", "emit the equilibrium family");
  double theta = 0.0;
  std::string r_text = "e0";
  int sign = 1;
  bool self_verify = false;
  family->add_option("--theta", theta, "family angle");
  family->add_option("--r", r_text, "unit rotor quaternion");
  family->add_option("--sign", sign, "+1 or -1")
      ->check(CLI::IsMember({1, -1}));
  family->add_flag("--self-verify", self_verify,
                   "append a verification stanza");

  // classify
  auto* classify = app.add_subcommand("classify", "run the classification");
  std::string case_filter = "all";
  int cgrid = 4096;
  uint64_t cseed = 12345;
  std::string csv_out;
  classify->add_option("--case", case_filter,
                       "one of N1, N2-axis, N2-caseA, N2-caseB, M3, M4, "
                       "N3plus-i, N3plus-ii, all");
  classify->add_option("--grid", cgrid, "oracle grid size");
  classify->add_option("--seed", cseed, "grid seed");
  classify->add_option("--csv-out", csv_out, "write the scan CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (payoff->parsed())
      return cmd_payoff(g, gamma, identity, pa, qb, ua, ub);
    if (verify->parsed())
      return cmd_verify(g, file_a, file_b, tol, cluster_tol, with_oracle, grid,
                        seed);
    if (family->parsed()) return cmd_family(g, theta, r_text, sign,
                                            self_verify);
    if (classify->parsed()) return cmd_classify(g, case_filter, cgrid, cseed,
                                                csv_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitVerified;
}
