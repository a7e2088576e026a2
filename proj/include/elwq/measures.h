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

#ifndef ELWQ_MEASURES_H_
#define ELWQ_MEASURES_H_

#include <utility>
#include <vector>

#include "elwq/game.h"
#include "elwq/linalg.h"
#include "elwq/quaternion.h"

namespace elwq {

// Discrete mixed strategy: a finitely supported probability measure on the
// unit sphere of quaternions.
struct WeightedAtom {
  double w = 1.0;
  Quaternion q;
};

struct MixedStrategy {
  std::vector<WeightedAtom> atoms;

  MixedStrategy() = default;
  explicit MixedStrategy(std::vector<WeightedAtom> a) : atoms(std::move(a)) {}

  static MixedStrategy point(const Quaternion& q);
};

// Throws std::invalid_argument when weights are negative / don't sum to 1
// within 1e-12, or an atom is not unit-norm.
void validate_measure(const MixedStrategy& nu);

// Second moment S_{ab} = sum_i w_i q_a^(i) q_b^(i): symmetric, positive
// semidefinite, unit trace.
struct SecondMoment {
  Mat4 S;
};

SecondMoment second_moment(const MixedStrategy& nu);

// Any mixed strategy is payoff-equivalent to one supported on at most four
// orthonormal points: the spectral decomposition of its second moment.
struct CanonicalStrategy {
  std::vector<double> probs;          // descending, > 1e-12, sum to 1
  std::vector<Quaternion> supports;   // pairwise orthonormal
};

struct EigenSystem {
  Vec4 values;   // descending
  Mat4 vectors;  // vectors[k] is the eigenvector for values[k]
};

// Cyclic Jacobi iteration for a symmetric 4x4 matrix: rotations sweep all
// off-diagonal pairs until the off-diagonal Frobenius mass falls below 1e-14
// (at most 100 sweeps). Eigenvalues sorted descending; within degenerate
// clusters the vectors are re-orthonormalized by Gram-Schmidt.
// Throws std::invalid_argument when A is not symmetric within 1e-10.
EigenSystem symmetric_eigensolve(const Mat4& a);

CanonicalStrategy canonicalize(const MixedStrategy& nu);

MixedStrategy to_measure(const CanonicalStrategy& c);

// Two measures are payoff-indistinguishable iff their second moments agree;
// compared in Frobenius norm within 1e-10.
bool equivalence_check(const MixedStrategy& nu1, const MixedStrategy& nu2);

// Expected payoffs of the maximally entangled game under product play.
std::pair<double, double> mixed_payoff(const MixedStrategy& mu,
                                       const MixedStrategy& nu,
                                       const ClassicalPayoffs& payoffs);

}  // namespace elwq

#endif  // ELWQ_MEASURES_H_
