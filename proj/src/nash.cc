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

#include "elwq/nash.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace elwq {

namespace {

Mat4 conjugated_diag(const Mat4& m, const Vec4& d) {
  // m^T diag(d) m
  Mat4 r = mat4_zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int g = 0; g < 4; ++g) r[i][j] += d[g] * m[g][i] * m[g][j];
  return r;
}

}  // namespace

BestResponseMatrix best_response_matrix_A(const CanonicalStrategy& nu,
                                          const ClassicalPayoffs& payoffs) {
  Mat4 y = mat4_zero();
  for (size_t b = 0; b < nu.probs.size(); ++b) {
    Mat4 mt = right_mul_matrix(nu.supports[b]);
    y = mat_add(y, mat_scale(conjugated_diag(mt, payoffs.X), nu.probs[b]));
  }
  return {y, Side::kAlice};
}

BestResponseMatrix best_response_matrix_B(const CanonicalStrategy& mu,
                                          const ClassicalPayoffs& payoffs) {
  Mat4 z = mat4_zero();
  for (size_t a = 0; a < mu.probs.size(); ++a) {
    Mat4 m = left_mul_matrix(mu.supports[a]);
    z = mat_add(z,
                mat_scale(conjugated_diag(m, payoffs.xtilde()), mu.probs[a]));
  }
  return {z, Side::kBob};
}

EigenspaceReport maximal_eigenspace(const BestResponseMatrix& m,
                                    double cluster_tol) {
  EigenSystem es = symmetric_eigensolve(m.M);
  double spread = es.values[0] - es.values[3];
  double abs_tol = cluster_tol * std::max(1.0, spread);

  EigenspaceReport rep;
  rep.cluster_tol_used = abs_tol;
  // Greedy clustering downward from the top: a value joins the current
  // cluster when it is within abs_tol of the cluster's running maximum.
  int start = 0;
  while (start < 4) {
    int end = start + 1;
    while (end < 4 && es.values[start] - es.values[end] <= abs_tol) ++end;
    double mean = 0;
    for (int k = start; k < end; ++k) mean += es.values[k];
    rep.cluster_values.push_back(mean / (end - start));
    rep.multiplicities.push_back(end - start);
    if (start == 0)
      for (int k = 0; k < end; ++k) rep.top_basis.push_back(es.vectors[k]);
    start = end;
  }
  rep.top_gap = rep.cluster_values.size() > 1
                    ? rep.cluster_values[0] - rep.cluster_values[1]
                    : std::numeric_limits<double>::infinity();
  return rep;
}

double eigenspace_residual(const EigenspaceReport& rep, const Vec4& v) {
  Vec4 w = v;
  for (const Vec4& b : rep.top_basis)
    w = vec_sub(w, vec_scale(b, vec_dot(b, v)));
  return vec_norm(w);
}

NashReport verify_nash(const MixedStrategy& mu, const MixedStrategy& nu,
                       const ClassicalPayoffs& payoffs, double tol,
                       double cluster_tol) {
  validate_measure(mu);
  validate_measure(nu);
  CanonicalStrategy cmu = canonicalize(mu);
  CanonicalStrategy cnu = canonicalize(nu);

  EigenspaceReport top_y =
      maximal_eigenspace(best_response_matrix_A(cnu, payoffs), cluster_tol);
  EigenspaceReport top_z =
      maximal_eigenspace(best_response_matrix_B(cmu, payoffs), cluster_tol);

  NashReport rep;
  rep.tol_used = tol;
  for (size_t i = 0; i < cmu.supports.size(); ++i) {
    rep.lambda.push_back(static_cast<int>(i));
    rep.residual_a =
        std::max(rep.residual_a, eigenspace_residual(top_y, cmu.supports[i].c));
  }
  for (size_t i = 0; i < cnu.supports.size(); ++i) {
    rep.sigma.push_back(static_cast<int>(i));
    rep.residual_b =
        std::max(rep.residual_b, eigenspace_residual(top_z, cnu.supports[i].c));
  }
  int m_count = static_cast<int>(cmu.supports.size());
  int n_count = static_cast<int>(cnu.supports.size());
  rep.type_m = std::max(m_count, n_count);
  rep.type_n = std::min(m_count, n_count);
  rep.verdict = rep.residual_a < tol && rep.residual_b < tol;
  rep.payoffs = mixed_payoff(to_measure(cmu), to_measure(cnu), payoffs);
  rep.top_gap = std::min(top_y.top_gap, top_z.top_gap);
  return rep;
}

std::pair<MixedStrategy, MixedStrategy> equilibrium_family(double theta,
                                                           const Quaternion& r,
                                                           int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  Quaternion ru = ensure_unit(r);
  const Quaternion e1 = Quaternion::basis(1);
  const Quaternion e2 = Quaternion::basis(2);
  const Quaternion e3 = Quaternion::basis(3);
  const double c = std::cos(theta), s = std::sin(theta);

  Quaternion a1 = mul(add(scale(e1, c), scale(e2, s)), ru);
  Quaternion a2 = scale(mul(add(scale(e1, -s), scale(e2, c)), ru),
                        static_cast<double>(sign));
  Quaternion rinv = inverse(ru);
  Quaternion b1 = rinv;
  Quaternion b2 = scale(mul(rinv, e3), static_cast<double>(sign));

  MixedStrategy mu(std::vector<WeightedAtom>{{0.5, a1}, {0.5, a2}});
  MixedStrategy nu(std::vector<WeightedAtom>{{0.5, b1}, {0.5, b2}});
  return {mu, nu};
}

FamilySU2 family_to_su2(double theta, const Quaternion& r) {
  // Pull each atom back through the engine boundary, so that maximally
  // entangled play of these matrices reproduces the family's payoffs
  // combination by combination.
  auto [mu, nu] = equilibrium_family(theta, r, +1);
  FamilySU2 f;
  f.u_a1 = strategy_unitaries(mu.atoms[0].q, nu.atoms[0].q).first;
  f.u_a2 = strategy_unitaries(mu.atoms[1].q, nu.atoms[0].q).first;
  f.u_b1 = strategy_unitaries(mu.atoms[0].q, nu.atoms[0].q).second;
  f.u_b2 = strategy_unitaries(mu.atoms[0].q, nu.atoms[1].q).second;
  return f;
}

}  // namespace elwq
