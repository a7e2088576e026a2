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

#include "elwq/game.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elwq {

double ClassicalPayoffs::max_entry() const {
  return *std::max_element(X.begin(), X.end());
}

double ClassicalPayoffs::min_entry() const {
  return *std::min_element(X.begin(), X.end());
}

GateOperator::GateOperator(double g) : gamma(g) {
  if (!(g >= 0.0 && g <= std::numbers::pi / 2.0 + 1e-15))
    throw std::invalid_argument("gamma must lie in [0, pi/2]");
}

GameState::GameState(const CVec4& amps) : amplitudes(amps) {
  double n = 0;
  for (const Complex& a : amps) n += std::norm(a);
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("state amplitudes are not normalized");
}

GenericityReport genericity_check(const ClassicalPayoffs& payoffs) {
  GenericityReport rep;
  const Vec4& x = payoffs.X;
  const char* names[4] = {"X0", "X1", "X2", "X3"};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (x[a] == x[b]) {
        rep.generic = false;
        rep.violations.push_back(std::string(names[a]) + "=" + names[b]);
      }
  // All six pairwise sums must be distinct as well.
  struct Sum {
    double v;
    int a, b;
  };
  std::vector<Sum> sums;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) sums.push_back({x[a] + x[b], a, b});
  for (size_t i = 0; i < sums.size(); ++i)
    for (size_t j = i + 1; j < sums.size(); ++j)
      if (sums[i].v == sums[j].v) {
        rep.generic = false;
        rep.violations.push_back(
            std::string(names[sums[i].a]) + "+" + names[sums[i].b] + "=" +
            names[sums[j].a] + "+" + names[sums[j].b]);
      }
  return rep;
}

bool payoff_condition_check(const ClassicalPayoffs& payoffs) {
  return 2.0 * payoffs.X[0] > payoffs.X[1] + payoffs.X[2];
}

CMat4 gate_matrix(const GateOperator& g) {
  const double c = std::cos(g.gamma / 2.0);
  const double s = std::sin(g.gamma / 2.0);
  // exp(-i g/2 s2 (x) s2): s2 (x) s2 acts as -s1 on {|CC>,|DD>} and as +s1
  // on {|CD>,|DC>}, giving opposite signs of the i*sin cross terms.
  CMat4 j{};
  j[0][0] = c;
  j[0][3] = Complex(0, s);
  j[3][0] = Complex(0, s);
  j[3][3] = c;
  j[1][1] = c;
  j[1][2] = Complex(0, -s);
  j[2][1] = Complex(0, -s);
  j[2][2] = c;
  return j;
}

GameState final_state(const GateOperator& g, const CMat2& u_a,
                      const CMat2& u_b) {
  validate_su2(u_a);
  validate_su2(u_b);
  CMat4 j = gate_matrix(g);
  CVec4 psi{Complex(1, 0), 0, 0, 0};
  psi = cmat_vec(j, psi);
  psi = cmat_vec(kron(u_a, u_b), psi);
  psi = cmat_vec(cmat_adjoint(j), psi);
  return GameState(psi);
}

std::pair<double, double> payoff_hilbert(const GateOperator& g,
                                         const CMat2& u_a, const CMat2& u_b,
                                         const ClassicalPayoffs& payoffs) {
  GameState st = final_state(g, u_a, u_b);
  Vec4 pr;
  for (int i = 0; i < 4; ++i) pr[i] = std::norm(st.amplitudes[i]);
  const Vec4& x = payoffs.X;
  // Basis order CC, CD, DC, DD: Alice defects in |DC>, Bob defects in |CD>.
  double a = x[0] * pr[0] + x[2] * pr[1] + x[1] * pr[2] + x[3] * pr[3];
  double b = x[0] * pr[0] + x[1] * pr[1] + x[2] * pr[2] + x[3] * pr[3];
  return {a, b};
}

std::pair<double, double> payoff_quaternion(const Quaternion& p,
                                            const Quaternion& q,
                                            const ClassicalPayoffs& payoffs,
                                            PayoffConvention convention) {
  Quaternion pu = ensure_unit(p);
  Quaternion qu = ensure_unit(q);
  Quaternion w = convention == PayoffConvention::kRaw ? mul(pu, inverse(qu))
                                                      : mul(pu, qu);
  Vec4 w2{w[0] * w[0], w[1] * w[1], w[2] * w[2], w[3] * w[3]};
  return {vec_dot(payoffs.X, w2), vec_dot(payoffs.xtilde(), w2)};
}

std::pair<Quaternion, Quaternion> strategy_quaternions(
    const CMat2& u_a, const CMat2& u_b, PayoffConvention convention) {
  Quaternion r = exchange_rotor();
  Quaternion p = rotate(r, alice_to_quaternion(u_a), r);
  Quaternion q = rotate(r, bob_to_quaternion(u_b), r);
  if (convention == PayoffConvention::kRelabeled) q = inverse(q);
  return {p, q};
}

std::pair<CMat2, CMat2> strategy_unitaries(const Quaternion& p,
                                           const Quaternion& q) {
  Quaternion r = exchange_rotor();
  Quaternion zp = rotate(inverse(r), p, inverse(r));
  Quaternion zq = rotate(inverse(r), inverse(q), inverse(r));
  return {alice_to_su2(zp), bob_to_su2(zq)};
}

ClassicalPayoffs affine_payoff_transform(const ClassicalPayoffs& payoffs,
                                         double lambda, double mu) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("affine transform requires lambda > 0");
  Vec4 x;
  for (int i = 0; i < 4; ++i) x[i] = lambda * payoffs.X[i] + mu;
  return ClassicalPayoffs(x);
}

bool stability_invariance_check(const Quaternion& p, const Quaternion& q,
                                const Quaternion& r,
                                const ClassicalPayoffs& payoffs) {
  Quaternion ru = ensure_unit(r);
  auto lhs = payoff_quaternion(p, q, payoffs);
  auto rhs = payoff_quaternion(mul(p, inverse(ru)), mul(ru, q), payoffs);
  return std::abs(lhs.first - rhs.first) <= 1e-12 &&
         std::abs(lhs.second - rhs.second) <= 1e-12;
}

}  // namespace elwq
