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

#include "elwq/measures.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace elwq {

MixedStrategy MixedStrategy::point(const Quaternion& q) {
  MixedStrategy nu;
  nu.atoms.push_back({1.0, q});
  return nu;
}

void validate_measure(const MixedStrategy& nu) {
  if (nu.atoms.empty())
    throw std::invalid_argument("measure must have at least one atom");
  double total = 0;
  for (const WeightedAtom& a : nu.atoms) {
    if (a.w < 0)
      throw std::invalid_argument("measure weights must be nonnegative");
    if (!is_unit(a.q))
      throw std::invalid_argument("measure atoms must be unit quaternions");
    total += a.w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("measure weights must sum to 1");
}

SecondMoment second_moment(const MixedStrategy& nu) {
  validate_measure(nu);
  Mat4 s = mat4_zero();
  for (const WeightedAtom& a : nu.atoms)
    s = mat_add(s, mat_scale(vec_outer(a.q.c, a.q.c), a.w));
  return SecondMoment{s};
}

namespace {

constexpr double kOffDiagTarget = 1e-14;
constexpr int kMaxSweeps = 100;

double off_diagonal_mass(const Mat4& a) {
  double s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

}  // namespace

EigenSystem symmetric_eigensolve(const Mat4& a_in) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(a_in[i][j] - a_in[j][i]) > 1e-10)
        throw std::invalid_argument("eigensolve requires a symmetric matrix");

  Mat4 a = a_in;
  // Symmetrize exactly so the rotations stay consistent.
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double m = 0.5 * (a[i][j] + a[j][i]);
      a[i][j] = a[j][i] = m;
    }
  Mat4 v = mat4_identity();  // accumulated rotations; rows become vectors

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_mass(a) < kOffDiagTarget) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        double apq = a[p][q];
        if (std::abs(apq) < 1e-300) continue;
        double theta = 0.5 * (a[q][q] - a[p][p]) / apq;
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        // A <- G^T A G with the Givens rotation G in the (p,q) plane.
        for (int k = 0; k < 4; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 4; ++k) {
          double vpk = v[p][k], vqk = v[q][k];
          v[p][k] = c * vpk - s * vqk;
          v[q][k] = s * vpk + c * vqk;
        }
      }
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a[i][i] > a[j][j]; });

  EigenSystem es;
  for (int k = 0; k < 4; ++k) {
    es.values[k] = a[order[k]][order[k]];
    es.vectors[k] = v[order[k]];
  }
  // Gram-Schmidt pass: inside numerically degenerate clusters the Jacobi
  // output basis is only orthogonal to roundoff; tighten it.
  for (int k = 0; k < 4; ++k) {
    Vec4 w = es.vectors[k];
    for (int j = 0; j < k; ++j)
      w = vec_sub(w, vec_scale(es.vectors[j], vec_dot(es.vectors[j], w)));
    es.vectors[k] = vec_scale(w, 1.0 / vec_norm(w));
  }
  return es;
}

CanonicalStrategy canonicalize(const MixedStrategy& nu) {
  EigenSystem es = symmetric_eigensolve(second_moment(nu).S);
  CanonicalStrategy c;
  double kept = 0;
  for (int k = 0; k < 4; ++k) {
    if (es.values[k] < 1e-12) continue;
    c.probs.push_back(es.values[k]);
    c.supports.push_back(Quaternion(es.vectors[k]));
    kept += es.values[k];
  }
  // The dropped mass is below 4e-12; rescale so the probabilities are exact.
  for (double& p : c.probs) p /= kept;
  return c;
}

MixedStrategy to_measure(const CanonicalStrategy& c) {
  MixedStrategy nu;
  for (size_t i = 0; i < c.probs.size(); ++i)
    nu.atoms.push_back({c.probs[i], c.supports[i]});
  return nu;
}

bool equivalence_check(const MixedStrategy& nu1, const MixedStrategy& nu2) {
  Mat4 d = mat_sub(second_moment(nu1).S, second_moment(nu2).S);
  return mat_frobenius(d) < 1e-10;
}

std::pair<double, double> mixed_payoff(const MixedStrategy& mu,
                                       const MixedStrategy& nu,
                                       const ClassicalPayoffs& payoffs) {
  validate_measure(mu);
  validate_measure(nu);
  double a = 0, b = 0;
  for (const WeightedAtom& pa : mu.atoms)
    for (const WeightedAtom& qa : nu.atoms) {
      auto val = payoff_quaternion(pa.q, qa.q, payoffs);
      a += pa.w * qa.w * val.first;
      b += pa.w * qa.w * val.second;
    }
  return {a, b};
}

}  // namespace elwq
