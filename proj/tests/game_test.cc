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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "elwq/game.h"
#include "test_rng.h"

using namespace elwq;
using elwq_test::Rng;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

CMat2 identity2() {
  return CMat2{{{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), Complex(1, 0)}}};
}

}  // namespace

TEST_CASE("gate operator validates its range") {
  CHECK_NOTHROW(GateOperator{0.0});
  CHECK_NOTHROW(GateOperator{kHalfPi});
  CHECK_THROWS_AS(GateOperator(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(GateOperator(kHalfPi + 0.1), std::invalid_argument);
}

TEST_CASE("gate matrix: closed form and unitarity") {
  // gamma = 0 is the identity.
  CMat4 j0 = gate_matrix(GateOperator(0.0));
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      CHECK(std::abs(j0[i][k] - (i == k ? Complex(1, 0) : Complex(0, 0))) <
            1e-15);

  // Maximal entanglement: first column (|CC> image) is (1,0,0,i)/sqrt2,
  // second column (|CD> image) is (0,1,-i,0)/sqrt2 - opposite cross sign.
  CMat4 j = gate_matrix(GateOperator(kHalfPi));
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(j[0][0] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(j[3][0] - Complex(0, s)) < 1e-15);
  CHECK(std::abs(j[1][1] - Complex(s, 0)) < 1e-15);
  CHECK(std::abs(j[2][1] - Complex(0, -s)) < 1e-15);
  CHECK(std::abs(j[1][0]) < 1e-15);
  CHECK(std::abs(j[2][0]) < 1e-15);

  Rng rng(201);
  for (int t = 0; t < 20; ++t) {
    CMat4 jg = gate_matrix(GateOperator(rng.uniform(0.0, kHalfPi)));
    CMat4 p = cmat_mul(jg, cmat_adjoint(jg));
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        CHECK(std::abs(p[i][k] - (i == k ? Complex(1, 0) : Complex(0, 0))) <
              1e-12);
  }
}

TEST_CASE("final state: classical identity play stays in |CC>") {
  GameState st = final_state(GateOperator(0.0), identity2(), identity2());
  CHECK(std::abs(st.amplitudes[0] - Complex(1, 0)) < 1e-15);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(st.amplitudes[i]) < 1e-15);
}

TEST_CASE("final state has unit norm for random play") {
  Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    GameState st = final_state(GateOperator(rng.uniform(0.0, kHalfPi)),
                               rng.su2(), rng.su2());
    double n = 0;
    for (int i = 0; i < 4; ++i) n += std::norm(st.amplitudes[i]);
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("classical payoffs at gamma = 0") {
  ClassicalPayoffs x;
  auto both_cooperate =
      payoff_hilbert(GateOperator(0.0), identity2(), identity2(), x);
  CHECK(both_cooperate.first == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(both_cooperate.second == doctest::Approx(3.0).epsilon(1e-14));

  // Alice's flip (her e1 image) defects against a cooperator: she takes 5,
  // Bob takes 0.
  CMat2 flip = alice_to_su2(Quaternion::basis(1));
  auto defect = payoff_hilbert(GateOperator(0.0), flip, identity2(), x);
  CHECK(defect.first == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(defect.second == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("quaternion payoffs: pinned values") {
  ClassicalPayoffs x;
  auto v = payoff_quaternion(Quaternion::basis(1), Quaternion::basis(0), x);
  CHECK(v.first == 5.0);
  CHECK(v.second == 0.0);
  // e1 * e3 = -e2: Bob collects the temptation payoff.
  auto w = payoff_quaternion(Quaternion::basis(1), Quaternion::basis(3), x);
  CHECK(w.first == 0.0);
  CHECK(w.second == 5.0);
  // Identity pair gives the cooperative cell in both conventions.
  for (auto conv : {PayoffConvention::kRelabeled, PayoffConvention::kRaw}) {
    auto c =
        payoff_quaternion(Quaternion::basis(0), Quaternion::basis(0), x, conv);
    CHECK(c.first == 3.0);
    CHECK(c.second == 3.0);
  }
  CHECK_THROWS_AS(
      payoff_quaternion(Quaternion(2, 0, 0, 0), Quaternion::basis(0), x),
      std::invalid_argument);
}

TEST_CASE("engines agree at maximal entanglement") {
  ClassicalPayoffs x;
  Rng rng(203);
  for (int t = 0; t < 300; ++t) {
    CMat2 u_a = rng.su2(), u_b = rng.su2();
    auto hp = payoff_hilbert(GateOperator(kHalfPi), u_a, u_b, x);
    for (auto conv : {PayoffConvention::kRelabeled, PayoffConvention::kRaw}) {
      auto [p, q] = strategy_quaternions(u_a, u_b, conv);
      auto qp = payoff_quaternion(p, q, x, conv);
      CHECK(std::abs(qp.first - hp.first) < 1e-12);
      CHECK(std::abs(qp.second - hp.second) < 1e-12);
    }
  }
}

TEST_CASE("strategy_unitaries inverts the boundary map") {
  ClassicalPayoffs x;
  Rng rng(204);
  for (int t = 0; t < 200; ++t) {
    Quaternion p = rng.unit_quaternion(), q = rng.unit_quaternion();
    auto [u_a, u_b] = strategy_unitaries(p, q);
    auto hp = payoff_hilbert(GateOperator(kHalfPi), u_a, u_b, x);
    auto qp = payoff_quaternion(p, q, x);
    CHECK(std::abs(qp.first - hp.first) < 1e-12);
    CHECK(std::abs(qp.second - hp.second) < 1e-12);
    // And the forward map recovers payoffs through the round trip.
    auto [p2, q2] = strategy_quaternions(u_a, u_b);
    auto qp2 = payoff_quaternion(p2, q2, x);
    CHECK(std::abs(qp2.first - qp.first) < 1e-12);
    CHECK(std::abs(qp2.second - qp.second) < 1e-12);
  }
}

TEST_CASE("player exchange swaps payoffs") {
  ClassicalPayoffs x;
  Rng rng(205);
  for (int t = 0; t < 200; ++t) {
    Quaternion p = rng.unit_quaternion(), q = rng.unit_quaternion();
    auto direct = payoff_quaternion(p, q, x);
    auto [p2, q2] = player_exchange(p, q);
    auto exchanged = payoff_quaternion(p2, q2, x);
    CHECK(std::abs(direct.first - exchanged.second) < 1e-12);
    CHECK(std::abs(direct.second - exchanged.first) < 1e-12);
  }
}

TEST_CASE("stability subgroup invariance") {
  ClassicalPayoffs x;
  Rng rng(206);
  for (int t = 0; t < 100; ++t) {
    CHECK(stability_invariance_check(rng.unit_quaternion(),
                                     rng.unit_quaternion(),
                                     rng.unit_quaternion(), x));
  }
}

TEST_CASE("genericity report") {
  CHECK(genericity_check(ClassicalPayoffs()).generic);
  GenericityReport r1 = genericity_check(ClassicalPayoffs(Vec4{1, 1, 0, 2}));
  CHECK(!r1.generic);
  bool has_value_clash = false;
  for (const auto& v : r1.violations) has_value_clash |= v == "X0=X1";
  CHECK(has_value_clash);
  GenericityReport r2 = genericity_check(ClassicalPayoffs(Vec4{0, 1, 2, 3}));
  CHECK(!r2.generic);
  bool has_sum_clash = false;
  for (const auto& v : r2.violations) has_sum_clash |= v == "X0+X3=X1+X2";
  CHECK(has_sum_clash);
}

TEST_CASE("classical solvability condition") {
  CHECK(payoff_condition_check(ClassicalPayoffs()));  // 2*3 > 5 + 0
  CHECK(!payoff_condition_check(ClassicalPayoffs(Vec4{1, 5, 0, 3})));
}

TEST_CASE("affine payoff transform") {
  ClassicalPayoffs x;
  ClassicalPayoffs y = affine_payoff_transform(x, 2.0, 1.0);
  CHECK(y.X == Vec4{7, 11, 1, 3});
  CHECK_THROWS_AS(affine_payoff_transform(x, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(affine_payoff_transform(x, 0.0, 0.0), std::invalid_argument);

  // Payoffs transform affinely with the table.
  Rng rng(207);
  for (int t = 0; t < 50; ++t) {
    Quaternion p = rng.unit_quaternion(), q = rng.unit_quaternion();
    auto before = payoff_quaternion(p, q, x);
    auto after = payoff_quaternion(p, q, y);
    CHECK(after.first == doctest::Approx(2 * before.first + 1).epsilon(1e-12));
    CHECK(after.second ==
          doctest::Approx(2 * before.second + 1).epsilon(1e-12));
  }
}

TEST_CASE("interpolated entanglement stays between the extremes") {
  // Sanity: payoffs vary continuously in gamma for a fixed pure pair.
  ClassicalPayoffs x;
  CMat2 flip = alice_to_su2(Quaternion::basis(1));
  double prev = payoff_hilbert(GateOperator(0.0), flip, identity2(), x).first;
  CHECK(prev == doctest::Approx(5.0));
  for (int i = 1; i <= 8; ++i) {
    double g = kHalfPi * i / 8.0;
    double cur = payoff_hilbert(GateOperator(g), flip, identity2(), x).first;
    CHECK(std::abs(cur - prev) < 1.2);
    prev = cur;
  }
}
