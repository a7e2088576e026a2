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

#ifndef ELWQ_CLASSIFIER_H_
#define ELWQ_CLASSIFIER_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "elwq/nash.h"
#include "elwq/sphere_grid.h"

namespace elwq {

// Flag attached to findings whose computed verdict disagrees with the
// published classification of this game.
inline constexpr const char* kDiscrepancyFlag =
    "discrepant-with-published-classification";

struct OracleConfig {
  int grid_size = 4096;
  uint64_t seed = 12345;
  double epsilon = 1e-3;
  int covering_samples = 400;  // probes for the covering-radius estimate
};

struct OracleResult {
  bool ok = false;
  double gain_a = 0.0;  // best pure grid deviation minus current payoff
  double gain_b = 0.0;
  double epsilon_used = 0.0;
  double epsilon_bound = 0.0;  // 2 * covering radius * payoff spread
};

// Brute-force check over a deterministic grid that no pure deviation
// improves either player by more than epsilon. Pure deviations suffice:
// payoffs are linear in each player's measure.
OracleResult epsilon_nash_oracle(const MixedStrategy& mu,
                                 const MixedStrategy& nu,
                                 const ClassicalPayoffs& payoffs,
                                 const OracleConfig& cfg);

// One row of a deterministic scan, serializable to CSV.
struct ScanRow {
  std::string case_label;
  std::string params;  // "k=v;k=v" pairs
  double gap = 0.0;
  double residual_a = 0.0;
  double residual_b = 0.0;
  bool verdict = false;
};

struct Finding {
  std::string description;
  MixedStrategy mu, nu;
  NashReport report;
  OracleResult oracle;
  bool has_oracle = false;
  bool flagged = false;
  std::string flag;
};

struct CaseResult {
  std::string label;  // N1 | N2-axis | N2-caseA | N2-caseB | M3 | M4 |
                      // N3plus-i | N3plus-ii
  std::string summary;
  std::vector<std::string> notes;
  std::vector<Finding> findings;
  std::vector<ScanRow> scan;
};

// --- individual cases -------------------------------------------------

// Pure-vs-pure (types (*,1)): Bob pinned to e0 by the stability symmetry,
// Alice's best responses are the argmax axis, then Bob's consistency is
// checked against that pure play.
CaseResult classify_N1(const ClassicalPayoffs& payoffs,
                       const OracleConfig& oracle_cfg = {});

// Bob on {e0 (rho), axis q (1-rho)}: Y is diagonal; finds every rho where
// the top diagonal value is degenerate, then resolves the (theta, sigma)
// branches of Alice's response and checks Bob's side.
CaseResult classify_N2_axis(const ClassicalPayoffs& payoffs,
                            const OracleConfig& oracle_cfg = {});

struct CaseAConfig {
  std::vector<double> rho_grid;    // defaults to 0.02..0.98 step 0.02
  int t_samples = 101;             // bracketing samples for t = q3^2
  double gap_tol = 1e-10;          // bisection tolerance on the gap
  double plateau_tol = 1e-9;       // whole-fiber degeneracy detection
  double consistency_step = 1e-3;  // theta/sigma scan resolution
};

std::vector<double> default_rho_grid();

// Bob's second atom q with q1=0 (and separately q2=0): Y splits into two
// 2x2 blocks; bisection on the signed cross-block top-eigenvalue gap hunts
// degenerate-top candidates per rho, which are then tested for Bob-side
// consistency over a (theta, sigma) scan.
CaseResult classify_N2_caseA(const ClassicalPayoffs& payoffs,
                             const CaseAConfig& cfg = {},
                             const OracleConfig& oracle_cfg = {});

// rho = 1/2 with a general imaginary q: uses the commutation of Y with
// right-multiplication by q, picks the top eigenvector with vanishing first
// component, and tests whether e0 tops Bob's matrix.
CaseResult classify_N2_caseB(const ClassicalPayoffs& payoffs,
                             const std::vector<Quaternion>& q_grid,
                             const OracleConfig& oracle_cfg = {});
CaseResult classify_N2_caseB(const ClassicalPayoffs& payoffs);

// Refutations for triple and quadruple top degeneracy of Y.
CaseResult classify_M34(const ClassicalPayoffs& payoffs);

struct N3Config {
  int simplex_steps = 100;   // probability resolution 1/steps
  double equal_tol = 1e-9;   // equal-max tolerance for the exact solutions
};

// Landsburg-style endgame: (i) both supports are 3-subsets of the axes —
// exhaustive feasibility over all 16 subset pairs (exact linear solves plus
// a simplex scan); (ii) the uniform-over-frame pair, whose matrices are
// exactly scalar, reported with the discrepancy flag.
CaseResult classify_N3plus(const ClassicalPayoffs& payoffs,
                           const N3Config& cfg = {},
                           const OracleConfig& oracle_cfg = {});

// --- full classification ----------------------------------------------

struct CatalogueEntry {
  std::string kind;  // "equilibrium-family" | "uniform-frame-pair"
  std::vector<double> theta_grid;
  std::vector<Quaternion> rotors;
  std::vector<int> signs;
  NashReport representative;
  OracleResult oracle;
  bool flagged = false;
  std::string flag;
};

struct ClassifierConfig {
  OracleConfig oracle;
  CaseAConfig case_a;
  N3Config n3;
  int case_b_grid = 500;
  uint64_t seed = 12345;
  int family_theta_samples = 8;  // catalogue verification density
  int family_rotor_samples = 4;
};

struct ClassificationReport {
  GenericityReport genericity;
  bool refused = false;  // set when payoffs are non-generic
  bool payoff_condition = false;
  std::vector<CaseResult> cases;
  std::vector<CatalogueEntry> catalogue;
  ClassifierConfig config;
};

ClassificationReport classify_all(const ClassicalPayoffs& payoffs,
                                  const ClassifierConfig& cfg = {});

}  // namespace elwq

#endif  // ELWQ_CLASSIFIER_H_
