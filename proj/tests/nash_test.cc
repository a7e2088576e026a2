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
#include "elwq/nash.h"
#include "test_rng.h"

using namespace elwq;
using elwq_test::Rng;

namespace {

Mat4 diag4(double a, double b, double c, double d) {
  return mat4_diag(Vec4{a, b, c, d});
}

}  // namespace

TEST_CASE("best-response matrices: quadratic form equals the payoff") {
  ClassicalPayoffs x;
  Rng rng(401);
  for (int t = 0; t < 200; ++t) {
    Quaternion p = rng.unit_quaternion(), q = rng.unit_quaternion();
    Mat4 y = best_response_matrix_A(canonicalize(MixedStrategy::point(q)), x).M;
    Mat4 z = best_response_matrix_B(canonicalize(MixedStrategy::point(p)), x).M;
    auto pay = payoff_quaternion(p, q, x);
    CHECK(quad_form(y, p.c) == doctest::Approx(pay.first).epsilon(1e-12));
    CHECK(quad_form(z, q.c) == doctest::Approx(pay.second).epsilon(1e-12));
  }
}

TEST_CASE("best-response matrices: pinned diagonals") {
  ClassicalPayoffs x;
  // Bob pure e0: Alice's matrix is diag(X).
  Mat4 y0 =
      best_response_matrix_A(canonicalize(MixedStrategy::point(Quaternion::basis(0))), x)
          .M;
  CHECK(mat_frobenius(mat_sub(y0, diag4(3, 5, 0, 1))) < 1e-14);

  // Bob mixing e0/e3 equally.
  MixedStrategy nu;
  nu.atoms = {{0.5, Quaternion::basis(0)}, {0.5, Quaternion::basis(3)}};
  Mat4 y = best_response_matrix_A(canonicalize(nu), x).M;
  CHECK(mat_frobenius(mat_sub(y, diag4(2, 2.5, 2.5, 2))) < 1e-14);

  // Alice mixing e1/e2 equally: Bob's matrix.
  MixedStrategy mu;
  mu.atoms = {{0.5, Quaternion::basis(1)}, {0.5, Quaternion::basis(2)}};
  Mat4 z = best_response_matrix_B(canonicalize(mu), x).M;
  CHECK(mat_frobenius(mat_sub(z, diag4(2.5, 2, 2, 2.5))) < 1e-14);

  // Alice pure e0 and pure e1.
  Mat4 z0 =
      best_response_matrix_B(canonicalize(MixedStrategy::point(Quaternion::basis(0))), x)
          .M;
  CHECK(mat_frobenius(mat_sub(z0, diag4(3, 0, 5, 1))) < 1e-14);
  Mat4 z1 =
      best_response_matrix_B(canonicalize(MixedStrategy::point(Quaternion::basis(1))), x)
          .M;
  CHECK(mat_frobenius(mat_sub(z1, diag4(0, 3, 1, 5))) < 1e-14);
}

TEST_CASE("maximal eigenspace clustering") {
  BestResponseMatrix m{diag4(5, 5 - 1e-12, 1, 0), Side::kAlice};
  EigenspaceReport rep = maximal_eigenspace(m);
  REQUIRE(rep.top_basis.size() == 2);
  CHECK(rep.multiplicities[0] == 2);
  CHECK(rep.top_gap == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(eigenspace_residual(rep, Vec4{0, 0, 0, 1}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigenspace_residual(rep, Vec4{1, 0, 0, 0}) < 1e-9);

  // Scalar matrix: a single cluster, infinite gap.
  BestResponseMatrix s{diag4(2, 2, 2, 2), Side::kBob};
  EigenspaceReport srep = maximal_eigenspace(s);
  CHECK(srep.top_basis.size() == 4);
  CHECK(std::isinf(srep.top_gap));
}

TEST_CASE("verify_nash: the reference failure (e1, e0)") {
  ClassicalPayoffs x;
  NashReport rep = verify_nash(MixedStrategy::point(Quaternion::basis(1)),
                               MixedStrategy::point(Quaternion::basis(0)), x);
  CHECK(!rep.verdict);
  CHECK(rep.type_m == 1);
  CHECK(rep.type_n == 1);
  CHECK(rep.payoffs.first == doctest::Approx(5.0));
  CHECK(rep.payoffs.second == doctest::Approx(0.0));
  // Alice is at her optimum; Bob is maximally off his (e0 orthogonal to e3).
  CHECK(rep.residual_a < 1e-12);
  CHECK(rep.residual_b == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("verify_nash: the axis family point") {
  ClassicalPayoffs x;
  MixedStrategy mu, nu;
  mu.atoms = {{0.5, Quaternion::basis(1)}, {0.5, Quaternion::basis(2)}};
  nu.atoms = {{0.5, Quaternion::basis(0)}, {0.5, Quaternion::basis(3)}};
  NashReport rep = verify_nash(mu, nu, x);
  CHECK(rep.verdict);
  CHECK(rep.type_m == 2);
  CHECK(rep.type_n == 2);
  CHECK(rep.payoffs.first == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(rep.payoffs.second == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(rep.top_gap == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("verify_nash orders the type pair") {
  ClassicalPayoffs x;
  MixedStrategy mu;
  mu.atoms = {{0.5, Quaternion::basis(1)}, {0.5, Quaternion::basis(2)}};
  NashReport rep =
      verify_nash(mu, MixedStrategy::point(Quaternion::basis(0)), x);
  CHECK(rep.type_m == 2);
  CHECK(rep.type_n == 1);
  NashReport swapped =
      verify_nash(MixedStrategy::point(Quaternion::basis(0)), mu, x);
  CHECK(swapped.type_m == 2);
  CHECK(swapped.type_n == 1);
}

TEST_CASE("equilibrium family: validation and structure") {
  CHECK_THROWS_AS(equilibrium_family(0.0, Quaternion(1, 1, 0, 0), +1),
                  std::invalid_argument);
  CHECK_THROWS_AS(equilibrium_family(0.0, Quaternion::basis(0), 2),
                  std::invalid_argument);

  auto [mu, nu] = equilibrium_family(0.0, Quaternion::basis(0), +1);
  REQUIRE(mu.atoms.size() == 2);
  REQUIRE(nu.atoms.size() == 2);
  CHECK(vec_norm(vec_sub(mu.atoms[0].q.c, Quaternion::basis(1).c)) < 1e-15);
  CHECK(vec_norm(vec_sub(mu.atoms[1].q.c, Quaternion::basis(2).c)) < 1e-15);
  CHECK(vec_norm(vec_sub(nu.atoms[0].q.c, Quaternion::basis(0).c)) < 1e-15);
  CHECK(vec_norm(vec_sub(nu.atoms[1].q.c, Quaternion::basis(3).c)) < 1e-15);
}

TEST_CASE("equilibrium family verifies for random parameters") {
  ClassicalPayoffs x;
  Rng rng(402);
  for (int t = 0; t < 60; ++t) {
    double theta = rng.uniform(0.0, std::numbers::pi);
    Quaternion r = rng.unit_quaternion();
    int sign = rng.uniform() < 0.5 ? +1 : -1;
    auto [mu, nu] = equilibrium_family(theta, r, sign);
    for (const auto& a : mu.atoms) CHECK(is_unit(a.q, 1e-12));
    for (const auto& a : nu.atoms) CHECK(is_unit(a.q, 1e-12));
    CHECK(std::abs(vec_dot(mu.atoms[0].q.c, mu.atoms[1].q.c)) < 1e-12);
    CHECK(std::abs(vec_dot(nu.atoms[0].q.c, nu.atoms[1].q.c)) < 1e-12);
    NashReport rep = verify_nash(mu, nu, x);
    CHECK(rep.verdict);
    CHECK(rep.payoffs.first == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(rep.payoffs.second == doctest::Approx(2.5).epsilon(1e-10));
  }
}

TEST_CASE("family SU(2) matrices realize the same payoffs") {
  ClassicalPayoffs x;
  GateOperator g(std::numbers::pi / 2);
  Rng rng(403);
  for (int t = 0; t < 20; ++t) {
    double theta = rng.uniform(0.0, std::numbers::pi);
    Quaternion r = rng.unit_quaternion();
    auto [mu, nu] = equilibrium_family(theta, r, +1);
    FamilySU2 su2 = family_to_su2(theta, r);
    const CMat2 ua[2] = {su2.u_a1, su2.u_a2};
    const CMat2 ub[2] = {su2.u_b1, su2.u_b2};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        auto hp = payoff_hilbert(g, ua[i], ub[j], x);
        auto qp = payoff_quaternion(mu.atoms[i].q, nu.atoms[j].q, x);
        CHECK(std::abs(hp.first - qp.first) < 1e-10);
        CHECK(std::abs(hp.second - qp.second) < 1e-10);
      }
  }
}

TEST_CASE("the reference equilibrium is the theta=pi, r=e1 member") {
  // (alpha, beta) = (0, 1) means r = e1; theta = pi.
  ClassicalPayoffs x;
  auto [mu, nu] = equilibrium_family(std::numbers::pi, Quaternion::basis(1), +1);
  NashReport rep = verify_nash(mu, nu, x);
  CHECK(rep.verdict);
  CHECK(rep.payoffs.first == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("affine transforms preserve top eigenspaces") {
  ClassicalPayoffs x;
  Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    MixedStrategy nu;
    double w = rng.uniform(0.1, 0.9);
    nu.atoms = {{w, rng.unit_quaternion()}, {1 - w, rng.unit_quaternion()}};
    double lam = rng.uniform(0.2, 3.0), mu_shift = rng.uniform(-2.0, 2.0);
    ClassicalPayoffs y = affine_payoff_transform(x, lam, mu_shift);
    CanonicalStrategy c = canonicalize(nu);
    EigenspaceReport r1 = maximal_eigenspace(best_response_matrix_A(c, x));
    EigenspaceReport r2 = maximal_eigenspace(best_response_matrix_A(c, y));
    REQUIRE(r1.top_basis.size() == r2.top_basis.size());
    for (const Vec4& v : r1.top_basis) CHECK(eigenspace_residual(r2, v) < 1e-7);
    for (const Vec4& v : r2.top_basis) CHECK(eigenspace_residual(r1, v) < 1e-7);
  }
}
