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

#ifndef ELWQ_QUATERNION_H_
#define ELWQ_QUATERNION_H_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "elwq/linalg.h"

namespace elwq {

// Real quaternion p = p0*e0 + p1*e1 + p2*e2 + p3*e3 stored as a flat
// 4-vector. e0 is the unit; e1*e2 = e3 (cyclically), ei*ei = -e0.
struct Quaternion {
  Vec4 c{0.0, 0.0, 0.0, 0.0};

  Quaternion() = default;
  Quaternion(double c0, double c1, double c2, double c3) : c{c0, c1, c2, c3} {}
  explicit Quaternion(const Vec4& v) : c(v) {}

  double& operator[](int i) { return c[i]; }
  const double& operator[](int i) const { return c[i]; }

  // Basis element e_alpha, alpha in 0..3.
  static Quaternion basis(int alpha);
};

inline constexpr double kUnitNormTol = 1e-12;

Quaternion mul(const Quaternion& p, const Quaternion& q);
Quaternion conj(const Quaternion& p);
double norm(const Quaternion& p);
double norm_sq(const Quaternion& p);
// Throws std::domain_error on the zero quaternion.
Quaternion inverse(const Quaternion& p);

Quaternion add(const Quaternion& p, const Quaternion& q);
Quaternion scale(const Quaternion& p, double s);
Quaternion negate(const Quaternion& p);

bool is_unit(const Quaternion& p, double tol = kUnitNormTol);
// Validates |p| == 1 within tol; if renormalize is set, rescales instead of
// throwing. Throws std::invalid_argument otherwise.
Quaternion ensure_unit(const Quaternion& p, bool renormalize = false,
                       double tol = kUnitNormTol);

// Matrix of left multiplication: left_mul_matrix(p) * q = components of p*q.
// For unit p this is an SO(4) element.
Mat4 left_mul_matrix(const Quaternion& p);

// Matrix of right multiplication: right_mul_matrix(q) * p = components of
// p*q. For pure-imaginary unit q it is antisymmetric with square -I.
Mat4 right_mul_matrix(const Quaternion& q);

// r_left * v * inverse(r_right); both rotors must be unit. Acts as an SO(4)
// rotation of the component 4-vector.
Quaternion rotate(const Quaternion& r_left, const Quaternion& v,
                  const Quaternion& r_right);

// ---- SU(2) <-> quaternion maps ----
//
// SU(2) strategies are handled as full complex 2x2 matrices of the form
// [[a, b], [-conj(b), conj(a)]]. The two players use different (fixed)
// identifications of SU(2) with the unit quaternions.

inline constexpr double kSu2Tol = 1e-9;

// Validation: unitary and det == 1 within tol. Throws std::invalid_argument.
void validate_su2(const CMat2& u, double tol = kSu2Tol);

// Alice's identification: U = [[a,b],[-conj(b),conj(a)]] ->
//   p = (Re a, -Im b, -Re b, -Im a).
Quaternion alice_to_quaternion(const CMat2& u, double tol = kSu2Tol);
CMat2 alice_to_su2(const Quaternion& p);

// Bob's identification: U = [[alpha,beta],[-conj(beta),conj(alpha)]] ->
//   q = (Re alpha, Re beta, Im beta, Im alpha).
Quaternion bob_to_quaternion(const CMat2& u, double tol = kSu2Tol);
CMat2 bob_to_su2(const Quaternion& q);

// ---- signed basis permutations ----

// Request: find unit (p1, q1) with p1 * e_alpha * q1^-1 =
// signs[alpha] * e_{sigma^-1(alpha)} for all alpha.
struct SignedPermutation {
  std::array<int, 4> sigma{0, 1, 2, 3};  // a permutation of 0..3
  std::array<int, 4> signs{1, 1, 1, 1};  // each +1 or -1
};

// The 48 unit quaternions {+-e_a, (+-e_a +- e_b)/sqrt2,
// (+-e0 +- e1 +- e2 +- e3)/2} used as the candidate rotor set.
const std::vector<Quaternion>& binary_octahedral_set();

// Exhaustive search over candidate pairs; empty optional when the requested
// sign pattern is not realizable (a legitimate outcome).
std::optional<std::pair<Quaternion, Quaternion>> realize_signed_permutation(
    const SignedPermutation& sp);

// (p, q) -> (r*conj(q)*r^-1, r*conj(p)*r^-1) with r = (e0+e3)/sqrt2, so that
// the second player's payoff at (p,q) equals the first player's payoff at the
// exchanged pair.
std::pair<Quaternion, Quaternion> player_exchange(const Quaternion& p,
                                                  const Quaternion& q);

// The rotor (e0+e3)/sqrt2; conjugation by it rotates e1 -> e2 -> -e1 and
// fixes e0, e3.
Quaternion exchange_rotor();

}  // namespace elwq

#endif  // ELWQ_QUATERNION_H_
