// Copyright 2026 The vtemp Authors
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

#pragma once

// Random inputs shared by the property and acceptance suites.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "vtemp/core.hpp"
#include "vtemp/oracle.hpp"

namespace vtemp::testing {

using Rng = oracle::SplitMix64;

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::vector<double> random_energies(Rng& rng, std::size_t d, double scale = 10.0) {
  std::vector<double> e(d);
  for (double& x : e) x = scale * rng.uniform();
  return e;
}

/// Flat-Dirichlet populations, bounded away from zero.
inline std::vector<double> random_populations(Rng& rng, std::size_t d) {
  std::vector<double> p(d);
  double total = 0.0;
  for (double& x : p) {
    x = -std::log1p(-rng.uniform()) + 1e-3;
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

inline DiagonalSystem random_system(Rng& rng, std::size_t d) {
  return DiagonalSystem::make(random_energies(rng, d), random_populations(rng, d));
}

/// Passive by construction: populations sorted against the energy order.
inline DiagonalSystem random_passive(Rng& rng, std::size_t d, double scale = 10.0) {
  auto e = random_energies(rng, d, scale);
  auto p = random_populations(rng, d);
  std::vector<std::size_t> order(d);
  for (std::size_t i = 0; i < d; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
  std::sort(p.begin(), p.end(), std::greater<>());
  std::vector<double> placed(d);
  for (std::size_t r = 0; r < d; ++r) placed[order[r]] = p[r];
  return DiagonalSystem::make(std::move(e), std::move(placed));
}

}  // namespace vtemp::testing
