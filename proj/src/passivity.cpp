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

#include "vtemp/passivity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vtemp {

namespace {

std::vector<std::size_t> order_by_energy(const DiagonalSystem& sys) {
  std::vector<std::size_t> order(sys.dim());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sys.energy(a) < sys.energy(b); });
  return order;
}

}  // namespace

bool is_passive(const DiagonalSystem& sys) {
  const auto order = order_by_energy(sys);
  // Walk energy groups upward; every population in a group must not exceed the
  // smallest population found at strictly lower energy.
  double min_below = std::numeric_limits<double>::infinity();
  std::size_t g = 0;
  while (g < order.size()) {
    std::size_t end = g;
    double group_min = std::numeric_limits<double>::infinity();
    while (end < order.size() && sys.energy(order[end]) == sys.energy(order[g])) {
      const double p = sys.population(order[end]);
      if (p > min_below) return false;
      group_min = std::min(group_min, p);
      ++end;
    }
    min_below = std::min(min_below, group_min);
    g = end;
  }
  return true;
}

bool betas_equal(VirtualTemp a, VirtualTemp b, double tol) {
  if (!a.is_finite() || !b.is_finite()) return a == b;
  const double x = a.value();
  const double y = b.value();
  return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

bool is_completely_passive(const DiagonalSystem& sys, double tol) {
  double ground = std::numeric_limits<double>::infinity();
  for (double e : sys.energies()) ground = std::min(ground, e);
  bool populated_all_ground = true;
  bool any_empty = false;
  for (std::size_t k = 0; k < sys.dim(); ++k) {
    if (sys.population(k) == 0.0) {
      any_empty = true;
    } else if (sys.energy(k) != ground) {
      populated_all_ground = false;
    }
  }
  if (populated_all_ground) return true;
  if (any_empty) return false;

  std::optional<VirtualTemp> lowest;
  std::optional<VirtualTemp> highest;
  for (const Transition& t : all_transitions(sys)) {
    if (!t.beta.is_finite() || t.beta.value() < 0.0) return false;
    if (!lowest || t.beta < *lowest) lowest = t.beta;
    if (!highest || t.beta > *highest) highest = t.beta;
  }
  // No nondegenerate transition at all means a single energy value.
  if (!lowest) return true;
  return betas_equal(*lowest, *highest, tol);
}

PassiveRearrangement passive_rearrangement(const DiagonalSystem& sys) {
  const std::size_t d = sys.dim();
  const auto by_energy = order_by_energy(sys);
  std::vector<std::size_t> by_population(d);
  std::iota(by_population.begin(), by_population.end(), 0);
  std::stable_sort(by_population.begin(), by_population.end(),
                   [&](std::size_t a, std::size_t b) { return sys.population(a) > sys.population(b); });

  std::vector<std::size_t> permutation(d);
  std::vector<double> populations(d);
  for (std::size_t rank = 0; rank < d; ++rank) {
    permutation[by_population[rank]] = by_energy[rank];
    populations[by_energy[rank]] = sys.population(by_population[rank]);
  }

  double work = 0.0;
  if (!is_passive(sys)) {
    for (std::size_t k = 0; k < d; ++k) work += sys.energy(k) * (sys.population(k) - populations[k]);
    work = std::max(work, 0.0);
  }
  std::vector<double> energies(sys.energies().begin(), sys.energies().end());
  return PassiveRearrangement{std::move(permutation),
                              DiagonalSystem::make(std::move(energies), std::move(populations), sys.label()),
                              work};
}

double ergotropy(const DiagonalSystem& sys) { return passive_rearrangement(sys).work; }

std::pair<DiagonalSystem, double> apply_swap(const DiagonalSystem& sys, std::size_t i, std::size_t j) {
  if (i >= sys.dim() || j >= sys.dim()) {
    throw Error(Errc::kIndexOutOfRange, "swap index out of range for d=" + std::to_string(sys.dim()));
  }
  if (i == j) throw Error(Errc::kInvalidArgument, "swap needs two distinct levels");
  std::vector<double> populations(sys.populations().begin(), sys.populations().end());
  std::swap(populations[i], populations[j]);
  const double work = (sys.energy(i) - sys.energy(j)) * (sys.population(i) - sys.population(j));
  std::vector<double> energies(sys.energies().begin(), sys.energies().end());
  return {DiagonalSystem::make(std::move(energies), std::move(populations), sys.label()), work};
}

}  // namespace vtemp
