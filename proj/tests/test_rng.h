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

#ifndef ELWQ_TESTS_TEST_RNG_H_
#define ELWQ_TESTS_TEST_RNG_H_

#include <cmath>
#include <cstdint>
#include <numbers>

#include "elwq/linalg.h"
#include "elwq/quaternion.h"
#include "elwq/sphere_grid.h"

namespace elwq_test {

// Deterministic test randomness; every battery pins its own seed.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}

  double uniform() {
    return (elwq::splitmix64_next(state) >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gauss() {
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * uniform());
  }

  elwq::Quaternion unit_quaternion() {
    while (true) {
      elwq::Quaternion q(gauss(), gauss(), gauss(), gauss());
      double n = elwq::norm(q);
      if (n > 1e-6) return elwq::scale(q, 1.0 / n);
    }
  }

  elwq::Quaternion imaginary_unit_quaternion() {
    while (true) {
      elwq::Quaternion q(0.0, gauss(), gauss(), gauss());
      double n = elwq::norm(q);
      if (n > 1e-6) return elwq::scale(q, 1.0 / n);
    }
  }

  // Random SU(2) built directly from a Haar-ish point on S^3:
  // [[a, b], [-conj(b), conj(a)]].
  elwq::CMat2 su2() {
    elwq::Quaternion x = unit_quaternion();
    elwq::Complex a(x[0], x[1]), b(x[2], x[3]);
    return elwq::CMat2{{{a, b}, {-std::conj(b), std::conj(a)}}};
  }
};

}  // namespace elwq_test

#endif  // ELWQ_TESTS_TEST_RNG_H_
