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

#ifndef ELWQ_NASH_H_
#define ELWQ_NASH_H_

#include <utility>
#include <vector>

#include "elwq/game.h"
#include "elwq/measures.h"

namespace elwq {

enum class Side { kAlice, kBob };

// Symmetric 4x4 matrix whose quadratic form p^T M p is the named player's
// expected payoff against the opponent's (canonicalized) mixed strategy.
// Best responses are exactly the unit vectors in its maximal eigenspace.
struct BestResponseMatrix {
  Mat4 M;
  Side side;
};

// Alice's matrix against Bob's strategy nu:
//   Y = sum_b rho_b * mt(q_b)^T diag(X) mt(q_b),   mt = right_mul_matrix.
BestResponseMatrix best_response_matrix_A(const CanonicalStrategy& nu,
                                          const ClassicalPayoffs& payoffs);

// Bob's matrix against Alice's strategy mu:
//   Z = sum_a sigma_a * m(p_a)^T diag(Xtilde) m(p_a),  m = left_mul_matrix.
BestResponseMatrix best_response_matrix_B(const CanonicalStrategy& mu,
                                          const ClassicalPayoffs& payoffs);

inline constexpr double kDefaultClusterTol = 1e-9;
inline constexpr double kDefaultMembershipTol = 1e-9;

// Eigenvalues grouped into degeneracy clusters (tolerance scaled by the
// spectral spread), plus an orthonormal basis of the top cluster.
struct EigenspaceReport {
  std::vector<double> cluster_values;      // descending cluster means
  std::vector<int> multiplicities;         // sum to 4
  std::vector<Vec4> top_basis;             // orthonormal
  double top_gap = 0.0;                    // top cluster vs next (inf if none)
  double cluster_tol_used = 0.0;           // the absolute tolerance applied
};

EigenspaceReport maximal_eigenspace(const BestResponseMatrix& m,
                                    double cluster_tol = kDefaultClusterTol);

// Distance from a unit vector to the span of the top cluster:
// ||(I - P_top) v||.
double eigenspace_residual(const EigenspaceReport& rep, const Vec4& v);

struct NashReport {
  bool verdict = false;
  int type_m = 0;                    // max(|Lambda|, |Sigma|)
  int type_n = 0;                    // min(|Lambda|, |Sigma|)
  double residual_a = 0.0;           // worst membership defect, Alice supports
  double residual_b = 0.0;
  std::pair<double, double> payoffs{0.0, 0.0};
  std::vector<int> lambda;           // Alice's canonical support indices
  std::vector<int> sigma;            // Bob's canonical support indices
  double top_gap = 0.0;              // min of the two sides' top gaps
  double tol_used = 0.0;
};

// Nash check: after canonicalizing both measures, every support of each
// player must lie in the maximal eigenspace of that player's best-response
// matrix against the other.
NashReport verify_nash(const MixedStrategy& mu, const MixedStrategy& nu,
                       const ClassicalPayoffs& payoffs,
                       double tol = kDefaultMembershipTol,
                       double cluster_tol = kDefaultClusterTol);

// The equilibrium family of the maximally entangled game:
//   Alice: {(e1 cos t + e2 sin t) r,  sign*(-e1 sin t + e2 cos t) r},
//   Bob:   {r^-1,  sign * r^-1 e3},   all weights 1/2.
std::pair<MixedStrategy, MixedStrategy> equilibrium_family(double theta,
                                                           const Quaternion& r,
                                                           int sign = +1);

// The same family expressed as SU(2) matrices: playing any (u_a, u_b)
// combination at maximal entanglement realizes the payoff of the
// corresponding pair of atoms.
struct FamilySU2 {
  CMat2 u_a1, u_a2, u_b1, u_b2;
};

FamilySU2 family_to_su2(double theta, const Quaternion& r);

}  // namespace elwq

#endif  // ELWQ_NASH_H_
