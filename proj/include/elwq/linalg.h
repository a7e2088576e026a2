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

#ifndef ELWQ_LINALG_H_
#define ELWQ_LINALG_H_

// Small fixed-size real/complex dense types. Everything the project needs is
// 2x2 complex, 4x4 real/complex and 4-vectors, so no general linear-algebra
// dependency is pulled in.

#include <array>
#include <cmath>
#include <complex>

namespace elwq {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;  // row-major: M[i][j]

using Complex = std::complex<double>;
using CVec4 = std::array<Complex, 4>;
using CMat2 = std::array<std::array<Complex, 2>, 2>;
using CMat4 = std::array<std::array<Complex, 4>, 4>;

inline Mat4 mat4_zero() {
  return Mat4{Vec4{0, 0, 0, 0}, Vec4{0, 0, 0, 0}, Vec4{0, 0, 0, 0},
              Vec4{0, 0, 0, 0}};
}

inline Mat4 mat4_identity() {
  Mat4 m = mat4_zero();
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat4 mat4_diag(const Vec4& d) {
  Mat4 m = mat4_zero();
  for (int i = 0; i < 4; ++i) m[i][i] = d[i];
  return m;
}

inline Vec4 mat_vec(const Mat4& m, const Vec4& v) {
  Vec4 r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline Mat4 mat_mul(const Mat4& a, const Mat4& b) {
  Mat4 r = mat4_zero();
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat4 mat_transpose(const Mat4& m) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = m[j][i];
  return r;
}

inline Mat4 mat_add(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

inline Mat4 mat_scale(const Mat4& a, double s) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i][j] * s;
  return r;
}

inline Mat4 mat_sub(const Mat4& a, const Mat4& b) {
  return mat_add(a, mat_scale(b, -1.0));
}

inline double mat_frobenius(const Mat4& m) {
  double s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += m[i][j] * m[i][j];
  return std::sqrt(s);
}

inline double vec_dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline double vec_norm(const Vec4& a) { return std::sqrt(vec_dot(a, a)); }

inline Vec4 vec_scale(const Vec4& a, double s) {
  return Vec4{a[0] * s, a[1] * s, a[2] * s, a[3] * s};
}

inline Vec4 vec_add(const Vec4& a, const Vec4& b) {
  return Vec4{a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

inline Vec4 vec_sub(const Vec4& a, const Vec4& b) {
  return Vec4{a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline Mat4 vec_outer(const Vec4& a, const Vec4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = a[i] * b[j];
  return r;
}

// Quadratic form v^T M v.
inline double quad_form(const Mat4& m, const Vec4& v) {
  return vec_dot(v, mat_vec(m, v));
}

// ---- complex helpers ----

inline CVec4 cmat_vec(const CMat4& m, const CVec4& v) {
  CVec4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline CMat4 cmat_mul(const CMat4& a, const CMat4& b) {
  CMat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline CMat4 cmat_adjoint(const CMat4& m) {
  CMat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i][j] = std::conj(m[j][i]);
  return r;
}

inline CMat4 cmat_identity() {
  CMat4 m{};
  for (int i = 0; i < 4; ++i) m[i][i] = 1.0;
  return m;
}

// Kronecker product of 2x2 blocks; the first factor indexes the slow qubit.
inline CMat4 kron(const CMat2& a, const CMat2& b) {
  CMat4 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
  return r;
}

inline CMat2 cmat2_mul(const CMat2& a, const CMat2& b) {
  CMat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline CMat2 cmat2_adjoint(const CMat2& m) {
  return CMat2{{{std::conj(m[0][0]), std::conj(m[1][0])},
                {std::conj(m[0][1]), std::conj(m[1][1])}}};
}

inline double cmat2_unitarity_defect(const CMat2& u) {
  CMat2 p = cmat2_mul(u, cmat2_adjoint(u));
  double s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex want = (i == j) ? Complex(1, 0) : Complex(0, 0);
      s += std::norm(p[i][j] - want);
    }
  return std::sqrt(s);
}

}  // namespace elwq

#endif  // ELWQ_LINALG_H_
