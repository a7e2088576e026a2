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

#ifndef ELWQ_SPHERE_GRID_H_
#define ELWQ_SPHERE_GRID_H_

#include <cstdint>
#include <vector>

#include "elwq/quaternion.h"

namespace elwq {

// splitmix64 step; used to derive deterministic offsets from a seed.
uint64_t splitmix64_next(uint64_t& state);

// Deterministic low-discrepancy grid of K unit quaternions: Hopf
// coordinates with the fiber measure stratified over layers and the two
// angles advanced by the R2 additive sequence, phase-offset from the seed.
std::vector<Quaternion> sphere_grid(int k, uint64_t seed);

// Same idea one dimension down: K pure-imaginary unit quaternions
// (0, n1, n2, n3) quasi-uniform on the 2-sphere.
std::vector<Quaternion> imaginary_sphere_grid(int k, uint64_t seed);

// Empirical covering radius of the grid, measured modulo the q ~ -q
// identification (payoffs are even in q). Brute force over `samples`
// pseudo-random probes.
double covering_radius_estimate(const std::vector<Quaternion>& grid,
                                int samples, uint64_t seed);

}  // namespace elwq

#endif  // ELWQ_SPHERE_GRID_H_
