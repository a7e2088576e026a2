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

#include "elwq/sphere_grid.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace elwq {

uint64_t splitmix64_next(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

double unit_interval(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Fractional parts of i/plastic^d: the R2 additive recurrence constants.
constexpr double kR2A1 = 0.7548776662466927;
constexpr double kR2A2 = 0.5698402909980532;

}  // namespace

std::vector<Quaternion> sphere_grid(int k, uint64_t seed) {
  if (k <= 0) throw std::invalid_argument("grid size must be positive");
  uint64_t st = seed;
  const double s1 = unit_interval(splitmix64_next(st));
  const double s2 = unit_interval(splitmix64_next(st));
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<Quaternion> grid;
  grid.reserve(k);
  for (int i = 0; i < k; ++i) {
    // Hopf coordinates (eta, xi1, xi2); u = sin^2(eta) is uniform under the
    // round measure, so stratify u and low-discrepancy the two angles.
    double u = (i + 0.5) / k;
    double eta = std::asin(std::sqrt(u));
    double xi1 = two_pi * std::fmod(i * kR2A1 + s1, 1.0);
    double xi2 = two_pi * std::fmod(i * kR2A2 + s2, 1.0);
    grid.push_back(Quaternion(std::cos(eta) * std::cos(xi1),
                              std::cos(eta) * std::sin(xi1),
                              std::sin(eta) * std::cos(xi2),
                              std::sin(eta) * std::sin(xi2)));
  }
  return grid;
}

std::vector<Quaternion> imaginary_sphere_grid(int k, uint64_t seed) {
  if (k <= 0) throw std::invalid_argument("grid size must be positive");
  uint64_t st = seed ^ 0x517cc1b727220a95ull;
  const double s1 = unit_interval(splitmix64_next(st));
  const double two_pi = 2.0 * std::numbers::pi;

  std::vector<Quaternion> grid;
  grid.reserve(k);
  for (int i = 0; i < k; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / k;  // stratified cos(theta)
    double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = two_pi * std::fmod(i * kR2A1 + s1, 1.0);
    grid.push_back(
        Quaternion(0.0, rho * std::cos(phi), rho * std::sin(phi), z));
  }
  return grid;
}

double covering_radius_estimate(const std::vector<Quaternion>& grid,
                                int samples, uint64_t seed) {
  if (grid.empty()) throw std::invalid_argument("empty grid");
  uint64_t st = seed ^ 0x2545F4914F6CDD1Dull;
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    // Gaussian 4-vector via Box-Muller, normalized.
    double g[4];
    for (int i = 0; i < 4; i += 2) {
      double u1 = unit_interval(splitmix64_next(st));
      double u2 = unit_interval(splitmix64_next(st));
      u1 = std::max(u1, 1e-300);
      double rad = std::sqrt(-2.0 * std::log(u1));
      g[i] = rad * std::cos(2.0 * std::numbers::pi * u2);
      g[i + 1] = rad * std::sin(2.0 * std::numbers::pi * u2);
    }
    double n = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]);
    Vec4 probe{g[0] / n, g[1] / n, g[2] / n, g[3] / n};
    double best = 0.0;
    for (const Quaternion& q : grid)
      best = std::max(best, std::abs(vec_dot(probe, q.c)));
    worst = std::max(worst, std::acos(std::min(1.0, best)));
  }
  return worst;
}

}  // namespace elwq
