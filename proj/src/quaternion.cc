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

#include "elwq/quaternion.h"

#include <cmath>
#include <stdexcept>

namespace elwq {

Quaternion Quaternion::basis(int alpha) {
  if (alpha < 0 || alpha > 3)
    throw std::invalid_argument("basis index must be 0..3");
  Quaternion e;
  e.c[alpha] = 1.0;
  return e;
}

Quaternion mul(const Quaternion& p, const Quaternion& q) {
  const Vec4& a = p.c;
  const Vec4& b = q.c;
  return Quaternion(
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + b[0] * a[1] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] + b[0] * a[2] + a[3] * b[1] - a[1] * b[3],
      a[0] * b[3] + b[0] * a[3] + a[1] * b[2] - a[2] * b[1]);
}

Quaternion conj(const Quaternion& p) {
  return Quaternion(p[0], -p[1], -p[2], -p[3]);
}

double norm_sq(const Quaternion& p) { return vec_dot(p.c, p.c); }

double norm(const Quaternion& p) { return std::sqrt(norm_sq(p)); }

Quaternion inverse(const Quaternion& p) {
  double n2 = norm_sq(p);
  if (n2 <= 0.0)
    throw std::domain_error("inverse of the zero quaternion is undefined");
  return scale(conj(p), 1.0 / n2);
}

Quaternion add(const Quaternion& p, const Quaternion& q) {
  return Quaternion(vec_add(p.c, q.c));
}

Quaternion scale(const Quaternion& p, double s) {
  return Quaternion(vec_scale(p.c, s));
}

Quaternion negate(const Quaternion& p) { return scale(p, -1.0); }

bool is_unit(const Quaternion& p, double tol) {
  return std::abs(norm(p) - 1.0) <= tol;
}

Quaternion ensure_unit(const Quaternion& p, bool renormalize, double tol) {
  double n = norm(p);
  if (std::abs(n - 1.0) <= tol) return p;
  if (renormalize) {
    if (n <= 0.0)
      throw std::invalid_argument("cannot renormalize the zero quaternion");
    return scale(p, 1.0 / n);
  }
  throw std::invalid_argument("quaternion is not unit-norm");
}

Mat4 left_mul_matrix(const Quaternion& p) {
  const double p0 = p[0], p1 = p[1], p2 = p[2], p3 = p[3];
  return Mat4{Vec4{p0, -p1, -p2, -p3},  //
              Vec4{p1, p0, -p3, p2},    //
              Vec4{p2, p3, p0, -p1},    //
              Vec4{p3, -p2, p1, p0}};
}

Mat4 right_mul_matrix(const Quaternion& q) {
  const double q0 = q[0], q1 = q[1], q2 = q[2], q3 = q[3];
  return Mat4{Vec4{q0, -q1, -q2, -q3},  //
              Vec4{q1, q0, q3, -q2},    //
              Vec4{q2, -q3, q0, q1},    //
              Vec4{q3, q2, -q1, q0}};
}

Quaternion rotate(const Quaternion& r_left, const Quaternion& v,
                  const Quaternion& r_right) {
  Quaternion rl = ensure_unit(r_left);
  Quaternion rr = ensure_unit(r_right);
  return mul(mul(rl, v), inverse(rr));
}

void validate_su2(const CMat2& u, double tol) {
  if (cmat2_unitarity_defect(u) > tol)
    throw std::invalid_argument("matrix is not unitary within tolerance");
  Complex det = u[0][0] * u[1][1] - u[0][1] * u[1][0];
  if (std::abs(det - Complex(1, 0)) > tol)
    throw std::invalid_argument("matrix determinant is not 1");
}

Quaternion alice_to_quaternion(const CMat2& u, double tol) {
  validate_su2(u, tol);
  Complex a = u[0][0], b = u[0][1];
  return Quaternion(a.real(), -b.imag(), -b.real(), -a.imag());
}

CMat2 alice_to_su2(const Quaternion& p) {
  Quaternion v = ensure_unit(p);
  Complex a(v[0], -v[3]);
  Complex b(-v[2], -v[1]);
  return CMat2{{{a, b}, {-std::conj(b), std::conj(a)}}};
}

Quaternion bob_to_quaternion(const CMat2& u, double tol) {
  validate_su2(u, tol);
  Complex alpha = u[0][0], beta = u[0][1];
  return Quaternion(alpha.real(), beta.real(), beta.imag(), alpha.imag());
}

CMat2 bob_to_su2(const Quaternion& q) {
  Quaternion v = ensure_unit(q);
  Complex alpha(v[0], v[3]);
  Complex beta(v[1], v[2]);
  return CMat2{{{alpha, beta}, {-std::conj(beta), std::conj(alpha)}}};
}

const std::vector<Quaternion>& binary_octahedral_set() {
  static const std::vector<Quaternion> set = [] {
    std::vector<Quaternion> s;
    const double h = 1.0 / std::sqrt(2.0);
    for (int a = 0; a < 4; ++a)
      for (int sa : {1, -1}) s.push_back(scale(Quaternion::basis(a), sa));
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        for (int sa : {1, -1})
          for (int sb : {1, -1}) {
            Quaternion q;
            q[a] = sa * h;
            q[b] = sb * h;
            s.push_back(q);
          }
    for (int s0 : {1, -1})
      for (int s1 : {1, -1})
        for (int s2 : {1, -1})
          for (int s3 : {1, -1})
            s.push_back(Quaternion(0.5 * s0, 0.5 * s1, 0.5 * s2, 0.5 * s3));
    return s;
  }();
  return set;
}

namespace {

bool matches_signed_permutation(const Quaternion& p1, const Quaternion& q1,
                                const SignedPermutation& sp) {
  std::array<int, 4> inv{};
  for (int a = 0; a < 4; ++a) inv[sp.sigma[a]] = a;
  Quaternion q1inv = inverse(q1);
  for (int a = 0; a < 4; ++a) {
    Quaternion got = mul(mul(p1, Quaternion::basis(a)), q1inv);
    Quaternion want = scale(Quaternion::basis(inv[a]), sp.signs[a]);
    if (vec_norm(vec_sub(got.c, want.c)) > 1e-12) return false;
  }
  return true;
}

}  // namespace

std::optional<std::pair<Quaternion, Quaternion>> realize_signed_permutation(
    const SignedPermutation& sp) {
  {
    std::array<int, 4> seen{0, 0, 0, 0};
    for (int a : sp.sigma) {
      if (a < 0 || a > 3) throw std::invalid_argument("bad permutation entry");
      seen[a]++;
    }
    for (int s : seen)
      if (s != 1) throw std::invalid_argument("sigma is not a permutation");
    for (int s : sp.signs)
      if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
  }
  const std::vector<Quaternion>& cands = binary_octahedral_set();
  for (const Quaternion& p1 : cands)
    for (const Quaternion& q1 : cands)
      if (matches_signed_permutation(p1, q1, sp)) return std::make_pair(p1, q1);
  return std::nullopt;
}

Quaternion exchange_rotor() {
  const double h = 1.0 / std::sqrt(2.0);
  return Quaternion(h, 0.0, 0.0, h);
}

std::pair<Quaternion, Quaternion> player_exchange(const Quaternion& p,
                                                  const Quaternion& q) {
  Quaternion r = exchange_rotor();
  return {rotate(r, conj(q), r), rotate(r, conj(p), r)};
}

}  // namespace elwq
