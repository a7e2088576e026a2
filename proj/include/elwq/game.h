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

#ifndef ELWQ_GAME_H_
#define ELWQ_GAME_H_

#include <string>
#include <utility>
#include <vector>

#include "elwq/linalg.h"
#include "elwq/quaternion.h"

namespace elwq {

// Classical payoff data. X = (X0, X1, X2, X3): X0 both cooperate, X1 the
// defector's payoff against a cooperator, X2 the cooperator's payoff against
// a defector, X3 both defect. xtilde() is X with components 1 and 2 swapped
// (the same cells read from the second player's seat).
struct ClassicalPayoffs {
  Vec4 X{3.0, 5.0, 0.0, 1.0};

  ClassicalPayoffs() = default;
  explicit ClassicalPayoffs(const Vec4& x) : X(x) {}

  Vec4 xtilde() const { return Vec4{X[0], X[2], X[1], X[3]}; }
  double max_entry() const;
  double min_entry() const;
};

// Entangling gate parameter; gamma in [0, pi/2] radians, 0 = classical play,
// pi/2 = maximal entanglement. Construction validates the range.
struct GateOperator {
  double gamma;
  explicit GateOperator(double g);
};

// Final two-qubit state over the basis |CC>, |CD>, |DC>, |DD> (first letter
// Alice, second Bob). Construction validates unit norm within 1e-12.
struct GameState {
  CVec4 amplitudes;
  explicit GameState(const CVec4& amps);
};

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> violations;
};

// Generic payoffs: all four values distinct and all six pairwise sums
// distinct. The classification machinery requires this.
GenericityReport genericity_check(const ClassicalPayoffs& payoffs);

// Informational only: the classical solvability condition 2*X0 > X1 + X2.
bool payoff_condition_check(const ClassicalPayoffs& payoffs);

// The 4x4 unitary of the entangling gate. Closed form: on the {|CC>,|DD>}
// block J|CC> = cos(g/2)|CC> + i sin(g/2)|DD>, and analogously on the
// {|CD>,|DC>} block with the opposite sign of the cross term.
CMat4 gate_matrix(const GateOperator& g);

// |psi_f> = J^dagger (U_A (x) U_B) J |CC>.
GameState final_state(const GateOperator& g, const CMat2& u_a,
                      const CMat2& u_b);

// Payoffs as expectation of the classical cell values in the final state:
// Alice's defection cell |DC> carries X1 for her and X2 for Bob.
std::pair<double, double> payoff_hilbert(const GateOperator& g,
                                         const CMat2& u_a, const CMat2& u_b,
                                         const ClassicalPayoffs& payoffs);

enum class PayoffConvention {
  kRelabeled,  // payoffs from w = p*q (the default throughout)
  kRaw,        // payoffs from w = p*q^-1
};

// Maximal-entanglement payoffs in quaternion form:
//   $_A = sum_alpha X_alpha * w_alpha^2,  $_B uses xtilde,  w as above.
std::pair<double, double> payoff_quaternion(
    const Quaternion& p, const Quaternion& q, const ClassicalPayoffs& payoffs,
    PayoffConvention convention = PayoffConvention::kRelabeled);

// Boundary between the two engines: the quaternion pair whose
// payoff_quaternion (in the requested convention) reproduces
// payoff_hilbert at gamma = pi/2 for the same unitaries. Both mapped
// quaternions are conjugated by the rotor (e0+e3)/sqrt2, which aligns the
// players' quaternion axes with the state-space cells; the relabeled variant
// additionally inverts Bob's quaternion.
std::pair<Quaternion, Quaternion> strategy_quaternions(
    const CMat2& u_a, const CMat2& u_b,
    PayoffConvention convention = PayoffConvention::kRelabeled);

// Inverse of strategy_quaternions for the relabeled convention: SU(2)
// matrices whose gamma = pi/2 play realizes payoff_quaternion(p, q).
std::pair<CMat2, CMat2> strategy_unitaries(const Quaternion& p,
                                           const Quaternion& q);

// X -> lambda*X + mu componentwise; lambda must be positive.
ClassicalPayoffs affine_payoff_transform(const ClassicalPayoffs& payoffs,
                                         double lambda, double mu);

// payoff_quaternion(p, q) == payoff_quaternion(p*r^-1, r*q) within 1e-12.
bool stability_invariance_check(const Quaternion& p, const Quaternion& q,
                                const Quaternion& r,
                                const ClassicalPayoffs& payoffs);

}  // namespace elwq

#endif  // ELWQ_GAME_H_
